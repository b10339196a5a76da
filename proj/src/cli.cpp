#include "hfk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <random>
#include <sstream>

#include "hfk/errors.hpp"
#include "hfk/homology.hpp"
#include "hfk/oracle.hpp"
#include "hfk/resolution.hpp"

namespace hfk {

namespace {

using nlohmann::json;

struct RunConfig {
  std::vector<std::string> braids;
  std::string resolution;
  std::string method = "regions";
  bool reduced = true;
  bool all_subsets = false;
  bool with_local = false;
  std::string format = "text";
  std::uint64_t subset_cap = std::uint64_t{1} << 18;
  int degree_cap = 48;
  bool auto_moves = false;
  int moves = 5;
  std::uint64_t seed = 1;
};

std::string half(int x2) {
  if (x2 % 2 == 0) return std::to_string(x2 / 2);
  return std::to_string(x2) + "/2";
}

json poly_json(const IntLaurentPoly& p) {
  json arr = json::array();
  for (auto [e, c] : p.coeffs()) arr.push_back({e, c});
  return arr;
}

json table_records(const PoincareTable& t) {
  json arr = json::array();
  for (const auto& [k, v] : t.dims)
    arr.push_back({{"alexander_x2", k.first}, {"homological", k.second}, {"dim", v}});
  return arr;
}

CubeOptions cube_options(const RunConfig& cfg) {
  CubeOptions o;
  o.reduced = cfg.reduced;
  o.groebner.degree_cap = cfg.degree_cap;
  return o;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const BraidWord w = parse_braid(cfg.braids.front());
  const LayeredBraidDiagram d = build_layered_diagram(w);
  const CubeComplex cube = assemble_cube(d, cube_options(cfg));
  const IntLaurentPoly delta = burau_alexander(w);

  if (!cfg.reduced) {
    if (cfg.format == "json") {
      json verts = json::array();
      for (const auto& v : cube.vertices)
        verts.push_back({{"resolution", to_string(v.index)},
                         {"hilbert_numerator", v.hilbert->numerator},
                         {"hilbert_denominator_power", v.hilbert->denominator_power},
                         {"grading_shift_x2", v.shift_x2}});
      out << json{{"braid", w.to_string()}, {"reduced", false}, {"vertices", verts}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
      out << "resolution,grading_shift_x2,hilbert_series\n";
      for (const auto& v : cube.vertices)
        out << to_string(v.index) << "," << v.shift_x2 << ",\"" << v.hilbert->to_string() << "\"\n";
    } else {
      out << "braid " << w.to_string() << " (unreduced vertex algebras)\n";
      for (const auto& v : cube.vertices)
        out << "  " << to_string(v.index) << "  shift A=" << half(v.shift_x2)
            << "  hilbert " << v.hilbert->to_string() << "\n";
    }
    return 0;
  }

  const PoincareTable table = homology(cube);
  const PoincareTable norm = table.normalized();
  const IntLaurentPoly chi = table.euler();
  const bool match = equal_up_to_unit(chi, doubled_exponents(delta));

  if (cfg.format == "json") {
    json j{{"braid", w.to_string()},
           {"reduced", true},
           {"records", table_records(norm)},
           {"homological_shift", table.min_homological()},
           {"total_dim", table.total()},
           {"chain_dim", cube.total_dimension()},
           {"euler", poly_json(chi)},
           {"alexander", poly_json(delta)},
           {"match", match}};
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "alexander_x2,homological,dim\n";
    for (const auto& [k, v] : norm.dims) out << k.first << "," << k.second << "," << v << "\n";
  } else {
    out << "braid " << w.to_string() << "\n";
    out << "homology (A, h) -> dim, h shifted by " << -table.min_homological() << ":\n";
    for (const auto& [k, v] : norm.dims) out << "  A=" << half(k.first) << "  h=" << k.second << "  dim " << v << "\n";
    out << "total " << table.total() << ", chain complex " << cube.total_dimension() << " generators\n";
    out << "euler (q^(1/2) exponents) " << chi.to_string() << "\n";
    out << "alexander " << delta.to_string() << "\n";
    out << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_relations(const RunConfig& cfg, std::ostream& out) {
  const BraidWord w = parse_braid(cfg.braids.front());
  const LayeredBraidDiagram d = build_layered_diagram(w);
  const ResolutionIndex idx = cfg.resolution.empty() || cfg.resolution == "singular"
                                  ? all_singular(d)
                                  : parse_resolution(cfg.resolution, d.num_crossings());
  const ResolvedGraph g(d, idx);
  std::vector<Relation> rels;
  if (cfg.with_local) rels = local_relations(g);
  std::vector<Relation> nonlocal;
  if (cfg.method == "regions")
    nonlocal = nonlocal_from_regions(g);
  else if (cfg.method == "cycles")
    nonlocal = nonlocal_from_cycles(g);
  else
    nonlocal = nonlocal_from_subsets(g, !cfg.all_subsets, cfg.subset_cap);
  // Canonical order and de-duplication for the non-local part.
  std::vector<std::string> seen;
  for (const auto& s : canonical_set(nonlocal)) seen.push_back(s);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& r : rels) rows.emplace_back(r.to_string(), to_string(r.source));
  const std::string src = cfg.method == "regions" ? "region" : cfg.method == "cycles" ? "cycle" : "subset";
  for (const auto& s : seen) rows.emplace_back(s, src);

  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& [rel, source] : rows) arr.push_back({{"relation", rel}, {"source", source}});
    out << json{{"braid", w.to_string()}, {"resolution", to_string(idx)}, {"method", cfg.method},
                {"relations", arr}}
               .dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "relation,source\n";
    for (const auto& [rel, source] : rows) out << "\"" << rel << "\"," << source << "\n";
  } else {
    for (const auto& [rel, source] : rows) out << rel << "\n";
  }
  return 0;
}

int cmd_alexander(const RunConfig& cfg, std::ostream& out) {
  const BraidWord w = parse_braid(cfg.braids.front());
  const IntLaurentPoly delta = burau_alexander(w);
  if (cfg.format == "json")
    out << json{{"braid", w.to_string()}, {"alexander", poly_json(delta)}}.dump(2) << "\n";
  else if (cfg.format == "csv") {
    out << "exponent,coefficient\n";
    for (auto [e, c] : delta.coeffs()) out << e << "," << c << "\n";
  } else
    out << delta.to_string() << "\n";
  return 0;
}

int cmd_dump(const RunConfig& cfg, std::ostream& out) {
  const BraidWord w = parse_braid(cfg.braids.front());
  const LayeredBraidDiagram d = build_layered_diagram(w);
  if (cfg.resolution.empty()) {
    out << d.dump();
    return 0;
  }
  const ResolutionIndex idx =
      cfg.resolution == "singular" ? all_singular(d) : parse_resolution(cfg.resolution, d.num_crossings());
  out << ResolvedGraph(d, idx).dump();
  return 0;
}

int cmd_check_invariance(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::pair<BraidWord, BraidWord>> pairs;
  std::vector<std::string> labels;
  const BraidWord base = parse_braid(cfg.braids.front());
  if (cfg.auto_moves) {
    if (cfg.braids.size() != 1) throw UsageError("--auto takes exactly one --braid");
    std::mt19937_64 rng(cfg.seed);
    const int max_letters = static_cast<int>(base.letters.size()) + 3;
    const int max_strands = base.strands + 1;
    for (int i = 0; i < cfg.moves; ++i) {
      const auto moves = applicable_moves(base, max_letters, max_strands);
      if (moves.empty()) throw InapplicableMove("no move applies to " + base.to_string());
      const MarkovMove mv = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
      pairs.emplace_back(base, apply_markov(base, mv));
      labels.push_back(mv.to_string());
    }
  } else {
    if (cfg.braids.size() != 2) throw UsageError("check-invariance needs two --braid values or --auto");
    pairs.emplace_back(base, parse_braid(cfg.braids[1]));
    labels.push_back("given");
  }
  bool all_pass = true;
  json results = json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto rep = compare_invariance(pairs[i].first, pairs[i].second, cube_options(cfg));
    all_pass = all_pass && rep.equal;
    if (cfg.format == "json") {
      results.push_back({{"first", pairs[i].first.to_string()},
                         {"second", pairs[i].second.to_string()},
                         {"move", labels[i]},
                         {"pass", rep.equal},
                         {"first_shift", rep.first_shift},
                         {"second_shift", rep.second_shift},
                         {"differences", rep.differences}});
    } else {
      out << (rep.equal ? "PASS " : "FAIL ") << labels[i] << ": " << pairs[i].first.to_string() << " vs "
          << pairs[i].second.to_string() << " (homological shifts " << rep.first_shift << ", "
          << rep.second_shift << ")\n";
      for (const auto& dline : rep.differences) out << "  " << dline << "\n";
    }
  }
  if (cfg.format == "json") out << json{{"results", results}, {"pass", all_pass}}.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot Floer cube-of-resolutions engine", "hfk"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_braid = [&](CLI::App* sub) {
    return sub->add_option("--braid", cfg.braids, "braid word, e.g. \"b=3; 1 -2 1 -2\"")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--degree-cap", cfg.degree_cap, "largest S-pair degree before giving up");
  };

  auto* compute = app.add_subcommand("compute", "homology table, Euler characteristic and oracle check");
  add_braid(compute)->expected(1);
  compute->add_flag("--reduced,!--unreduced", cfg.reduced, "reduced complex (default) or unreduced vertex algebras");
  add_format(compute);
  add_caps(compute);

  auto* relations = app.add_subcommand("relations", "non-local relations of one resolution");
  add_braid(relations)->expected(1);
  relations->add_option("--resolution", cfg.resolution, "bit string, first crossing first; default all singular");
  relations->add_option("--method", cfg.method, "generating family")
      ->check(CLI::IsMember({"regions", "cycles", "subsets"}));
  relations->add_flag("--all-subsets", cfg.all_subsets, "with --method subsets: every subset, not only minimal ones");
  relations->add_flag("--with-local", cfg.with_local, "also list the local relations");
  relations->add_option("--subset-cap", cfg.subset_cap, "largest number of subsets to enumerate");
  add_format(relations);

  auto* invariance = app.add_subcommand("check-invariance", "compare homology across Markov moves");
  add_braid(invariance)->expected(1, 2);
  invariance->add_flag("--auto", cfg.auto_moves, "generate moves from the single braid");
  invariance->add_option("--moves", cfg.moves, "number of generated moves")->check(CLI::PositiveNumber);
  invariance->add_option("--seed", cfg.seed, "random seed for generated moves");
  add_format(invariance);
  add_caps(invariance);

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial from the Burau representation");
  add_braid(alexander)->expected(1);
  add_format(alexander);

  auto* dump = app.add_subcommand("dump-diagram", "layered diagram, or one resolved graph");
  add_braid(dump)->expected(1);
  dump->add_option("--resolution", cfg.resolution, "bit string or 'singular'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "UsageError: " << e.what() << "\n";
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg, out);
    if (relations->parsed()) return cmd_relations(cfg, out);
    if (invariance->parsed()) return cmd_check_invariance(cfg, out);
    if (alexander->parsed()) return cmd_alexander(cfg, out);
    if (dump->parsed()) return cmd_dump(cfg, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.is_validation() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hfk
