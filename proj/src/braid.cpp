#include "hfk/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "hfk/errors.hpp"

namespace hfk {

std::string BraidWord::to_string() const {
  std::string out = "b=" + std::to_string(strands) + ";";
  for (int l : letters) out += " " + std::to_string(l);
  return out;
}

int closure_components(int strands, const std::vector<int>& letters) {
  // perm[p] = position at the top of the strand that starts at position p.
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> at(perm);  // at[pos] = strand currently at pos
  for (int l : letters) {
    const int i = std::abs(l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  for (int pos = 0; pos < strands; ++pos) perm[at[pos]] = pos;
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (int s = 0; s < strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int c = s; !seen[c]; c = perm[c]) seen[c] = true;
  }
  return cycles;
}

BraidWord make_braid(int strands, std::vector<int> letters) {
  if (strands < 2) throw MalformedWord("need at least 2 strands, got " + std::to_string(strands));
  if (letters.empty()) throw MalformedWord("empty braid word");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      throw MalformedWord("letter " + std::to_string(l) + " out of range for " +
                          std::to_string(strands) + " strands");
  const int comps = closure_components(strands, letters);
  if (comps != 1) throw NotAKnot("closure has " + std::to_string(comps) + " components");
  return BraidWord{strands, std::move(letters)};
}

namespace {

int parse_int(std::string_view tok) {
  int v = 0;
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
    throw MalformedWord("not an integer: '" + std::string(tok) + "'");
  return v;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ';', ' ');
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  if (toks.empty()) throw MalformedWord("empty input");
  std::string_view head = toks.front();
  if (head.starts_with("b=")) head.remove_prefix(2);
  const int strands = parse_int(head);
  std::vector<int> letters;
  for (std::size_t i = 1; i < toks.size(); ++i) letters.push_back(parse_int(toks[i]));
  return make_braid(strands, std::move(letters));
}

LayeredBraidDiagram::LayeredBraidDiagram(int strands, std::vector<Layer> layers)
    : strands_(strands), layers_(std::move(layers)) {
  for (int k = 0; k < num_layers(); ++k)
    if (!layers_[k].is_identity()) crossing_layers_.push_back(k);
}

int LayeredBraidDiagram::edge_label(int boundary, int position) const {
  const int L = num_layers();
  if (boundary == L) return position == 1 ? max_label() : position - 1;
  return boundary * strands_ + position - 1;
}

int LayeredBraidDiagram::num_negative() const noexcept {
  return static_cast<int>(std::count_if(layers_.begin(), layers_.end(),
                                        [](const Layer& l) { return l.sign < 0; }));
}

int LayeredBraidDiagram::num_bivalent() const noexcept {
  int total = 0;
  for (const auto& l : layers_) total += l.is_identity() ? strands_ : strands_ - 2;
  return total;
}

std::string LayeredBraidDiagram::dump() const {
  std::ostringstream out;
  out << "strands " << strands_ << " layers " << num_layers() << " edges 0.." << max_label() << "\n";
  for (int k = 0; k < num_layers(); ++k) {
    const Layer& l = layers_[k];
    out << "layer " << k << ": ";
    if (l.is_identity())
      out << "bivalent only";
    else
      out << "crossing " << (l.sign > 0 ? "+" : "-") << l.crossing;
    out << " | in";
    for (int p = 1; p <= strands_; ++p) out << " x" << edge_label(k, p);
    out << " | out";
    for (int p = 1; p <= strands_; ++p) out << " x" << edge_label(k + 1, p);
    out << "\n";
  }
  out << "basepoint: x" << max_label() << " -> * -> x0\n";
  return out.str();
}

LayeredBraidDiagram build_layered_diagram(const BraidWord& w) {
  std::vector<Layer> layers;
  layers.reserve(w.letters.size());
  for (int l : w.letters) layers.push_back(Layer{std::abs(l), l > 0 ? 1 : -1});
  return LayeredBraidDiagram(w.strands, std::move(layers));
}

LayeredBraidDiagram insert_bivalent_layer(const LayeredBraidDiagram& d, int at) {
  if (at < 0 || at > d.num_layers())
    throw InapplicableMove("layer index " + std::to_string(at) + " out of range");
  std::vector<Layer> layers = d.layers();
  layers.insert(layers.begin() + at, Layer{});
  return LayeredBraidDiagram(d.strands(), std::move(layers));
}

std::string MarkovMove::to_string() const {
  switch (kind) {
    case Kind::Conjugate: return "conjugate(" + std::to_string(position) + ")";
    case Kind::StabilizePositive: return "stabilize+";
    case Kind::StabilizeNegative: return "stabilize-";
    case Kind::Destabilize: return "destabilize";
    case Kind::Reid2Insert:
      return "reid2_insert(" + std::to_string(generator) + "@" + std::to_string(position) + ")";
    case Kind::Reid2Remove: return "reid2_remove(@" + std::to_string(position) + ")";
    case Kind::Reid3: return "reid3(@" + std::to_string(position) + ")";
  }
  return "?";
}

BraidWord apply_markov(const BraidWord& w, const MarkovMove& mv) {
  using K = MarkovMove::Kind;
  std::vector<int> letters = w.letters;
  const int m = static_cast<int>(letters.size());
  int strands = w.strands;
  switch (mv.kind) {
    case K::Conjugate: {
      const int k = ((mv.position % m) + m) % m;
      std::rotate(letters.begin(), letters.begin() + k, letters.end());
      break;
    }
    case K::StabilizePositive:
    case K::StabilizeNegative:
      letters.push_back(mv.kind == K::StabilizePositive ? strands : -strands);
      ++strands;
      break;
    case K::Destabilize: {
      if (strands < 3) throw InapplicableMove("cannot destabilize a 2-strand braid");
      const int top = strands - 1;
      const auto uses = std::count_if(letters.begin(), letters.end(),
                                      [&](int l) { return std::abs(l) == top; });
      if (std::abs(letters.back()) != top || uses != 1)
        throw InapplicableMove("last letter must be the only occurrence of sigma_" +
                               std::to_string(top));
      letters.pop_back();
      --strands;
      break;
    }
    case K::Reid2Insert: {
      if (mv.generator == 0 || std::abs(mv.generator) >= strands)
        throw InapplicableMove("generator out of range");
      if (mv.position < 0 || mv.position > m) throw InapplicableMove("position out of range");
      letters.insert(letters.begin() + mv.position, {mv.generator, -mv.generator});
      break;
    }
    case K::Reid2Remove: {
      const int p = mv.position;
      if (p < 0 || p + 1 >= m || letters[p] != -letters[p + 1])
        throw InapplicableMove("no cancelling pair at position " + std::to_string(p));
      if (m == 2) throw InapplicableMove("removal would empty the word");
      letters.erase(letters.begin() + p, letters.begin() + p + 2);
      break;
    }
    case K::Reid3: {
      const int p = mv.position;
      if (p < 0 || p + 2 >= m) throw InapplicableMove("position out of range");
      const int a = letters[p], b = letters[p + 1], c = letters[p + 2];
      const bool same_sign = (a > 0) == (b > 0) && (b > 0) == (c > 0);
      if (!same_sign || a != c || std::abs(std::abs(a) - std::abs(b)) != 1)
        throw InapplicableMove("no braid relation pattern at position " + std::to_string(p));
      letters[p] = b;
      letters[p + 1] = a;
      letters[p + 2] = b;
      break;
    }
  }
  return make_braid(strands, std::move(letters));
}

std::vector<MarkovMove> applicable_moves(const BraidWord& w, int max_letters, int max_strands) {
  using K = MarkovMove::Kind;
  std::vector<MarkovMove> out;
  const int m = static_cast<int>(w.letters.size());
  for (int k = 1; k < m; ++k) out.push_back({K::Conjugate, 1, k});
  if (m + 1 <= max_letters && w.strands + 1 <= max_strands) {
    out.push_back({K::StabilizePositive, 1, 0});
    out.push_back({K::StabilizeNegative, 1, 0});
  }
  auto try_add = [&](const MarkovMove& mv) {
    try {
      apply_markov(w, mv);
      out.push_back(mv);
    } catch (const InapplicableMove&) {
    }
  };
  try_add({K::Destabilize, 1, 0});
  if (m + 2 <= max_letters)
    for (int g = 1; g < w.strands; ++g)
      for (int p = 0; p <= m; ++p) {
        out.push_back({K::Reid2Insert, g, p});
        out.push_back({K::Reid2Insert, -g, p});
      }
  for (int p = 0; p + 1 < m; ++p) try_add({K::Reid2Remove, 1, p});
  for (int p = 0; p + 2 < m; ++p) try_add({K::Reid3, 1, p});
  return out;
}

}  // namespace hfk
