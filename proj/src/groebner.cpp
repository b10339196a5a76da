#include "hfk/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hfk/errors.hpp"

namespace hfk {

namespace {

F2Poly content_of(const RingPoly& p) {
  F2Poly g;
  for (const auto& t : p.terms()) {
    g = gcd(g, t.coeff);
    if (g.is_one()) break;
  }
  return g;
}

void divide_content(RingPoly& p, const F2Poly& c) {
  if (c.is_one() || c.is_zero()) return;
  for (auto& t : p.mutable_terms()) t.coeff = t.coeff / c;
}

void make_primitive(RingPoly& p) { divide_content(p, content_of(p)); }

// Fraction-free reduction over F_2[t]. The result is primitive and equals a
// nonzero F_2[t]-multiple of the field normal form. When `keep_lead` is set
// the leading term of p is never rewritten (used for interreduction).
RingPoly reduce(RingPoly p, const std::vector<RingPoly>& store,
                const std::vector<std::size_t>& active, bool keep_lead = false) {
  RingPoly rem(p.nvars());
  auto& rem_terms = rem.mutable_terms();
  int scalings = 0;
  bool first = true;
  while (!p.is_zero()) {
    const auto& lead = p.terms().front();
    const RingPoly* reducer = nullptr;
    if (!(keep_lead && first)) {
      for (std::size_t idx : active) {
        const RingPoly& g = store[idx];
        if (g.lead_monomial().divides(lead.mono)) {
          reducer = &g;
          break;
        }
      }
    }
    first = false;
    if (!reducer) {
      rem_terms.push_back(lead);
      p.mutable_terms().erase(p.mutable_terms().begin());
      continue;
    }
    const F2Poly h = gcd(lead.coeff, reducer->lead_coeff());
    const F2Poly a = reducer->lead_coeff() / h;
    const F2Poly b = lead.coeff / h;
    const Monomial m = reducer->lead_monomial().quotient_of(lead.mono);
    p = RingPoly::combine(a, p, b, m, *reducer);
    if (!a.is_one()) {
      for (auto& t : rem_terms) t.coeff = t.coeff * a;
      if (++scalings % 8 == 0) {
        // Keep coefficient growth in check.
        F2Poly c = gcd(content_of(p), content_of(rem));
        divide_content(p, c);
        divide_content(rem, c);
      }
    }
  }
  make_primitive(rem);
  return rem;
}

RingPoly s_polynomial(const RingPoly& f, const RingPoly& g) {
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  const F2Poly h = gcd(f.lead_coeff(), g.lead_coeff());
  RingPoly fs = f.scaled(g.lead_coeff() / h, f.lead_monomial().quotient_of(l));
  return RingPoly::combine(F2Poly::one(), fs, f.lead_coeff() / h,
                           g.lead_monomial().quotient_of(l), g);
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(std::size_t nvars, const BuchbergerOptions& opts) : nvars_(nvars), opts_(opts) {}

  // Returns false once the ideal is known to be the unit ideal.
  bool insert(RingPoly p) {
    p = reduce(std::move(p), store_, active_);
    if (p.is_zero()) return true;
    if (p.is_constant()) return false;
    store_.push_back(std::move(p));
    update(store_.size() - 1);
    return true;
  }

  bool run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const auto& a, const auto& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      CriticalPair pair = *best;
      pairs_.erase(best);
      if (pair.lcm.degree() > opts_.degree_cap)
        throw DegreeCapExceeded("S-pair of degree " + std::to_string(pair.lcm.degree()) +
                                " exceeds cap " + std::to_string(opts_.degree_cap));
      if (!insert(s_polynomial(store_[pair.i], store_[pair.j]))) return false;
    }
    return true;
  }

  std::vector<MultiPoly> reduced_basis() const {
    std::vector<MultiPoly> out;
    out.reserve(active_.size());
    for (std::size_t idx : active_) {
      std::vector<std::size_t> others;
      for (std::size_t o : active_)
        if (o != idx) others.push_back(o);
      out.push_back(to_monic_field(reduce(store_[idx], store_, others, true)));
    }
    std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
      return a.lead_monomial() > b.lead_monomial();
    });
    return out;
  }

 private:
  const Monomial& lm(std::size_t i) const { return store_[i].lead_monomial(); }

  // Gebauer-Moeller installation of a new basis element h.
  void update(std::size_t h) {
    std::vector<CriticalPair> fresh;
    for (std::size_t g : active_) fresh.push_back({g, h, lcm(lm(g), lm(h))});

    std::vector<CriticalPair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const auto& cand = fresh[k];
      bool keep = lm(cand.i).coprime(lm(h));
      if (!keep) {
        keep = true;
        for (std::size_t r = k + 1; r < fresh.size() && keep; ++r)
          if (fresh[r].lcm.divides(cand.lcm)) keep = false;
        for (const auto& d : kept)
          if (keep && d.lcm.divides(cand.lcm)) keep = false;
      }
      if (keep) kept.push_back(cand);
    }

    std::vector<CriticalPair> next;
    for (auto& p : pairs_) {
      const bool drop = lm(h).divides(p.lcm) && lcm(lm(p.i), lm(h)) != p.lcm &&
                        lcm(lm(p.j), lm(h)) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!lm(p.i).coprime(lm(h))) next.push_back(std::move(p));
    pairs_ = std::move(next);

    std::vector<std::size_t> active;
    for (std::size_t g : active_)
      if (!lm(h).divides(lm(g))) active.push_back(g);
    active.push_back(h);
    active_ = std::move(active);
  }

  std::size_t nvars_;
  BuchbergerOptions opts_;
  std::vector<RingPoly> store_;
  std::vector<std::size_t> active_;
  std::vector<CriticalPair> pairs_;
};

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void poly_trim(std::vector<long long>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<long long> poly_sub(std::vector<long long> a, const std::vector<long long>& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

// Numerator N(q) of the Hilbert series N(q)/(1-q)^n, by the pivot recursion
// N(I + <m>) = N(I) - q^deg(m) N(I : m).
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
      if (!gens[i].coprime(gens[j])) pairwise_coprime = false;
  if (pairwise_coprime) {
    std::vector<long long> n{1};
    for (const auto& g : gens) {
      std::vector<long long> f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      n = poly_mul(n, f);
    }
    poly_trim(n);
    return n;
  }
  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(pivot.quotient_of(lcm(g, pivot)));
  std::vector<long long> shifted(static_cast<std::size_t>(pivot.degree()), 0);
  for (long long c : hilbert_numerator(std::move(colon))) shifted.push_back(c);
  return poly_sub(hilbert_numerator(std::move(gens)), shifted);
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long HilbertSeries::coefficient(int d) const {
  if (d < 0) return 0;
  long long total = 0;
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    const long long jj = static_cast<long long>(j);
    if (jj > d) break;
    if (denominator_power == 0)
      total += (jj == d) ? numerator[j] : 0;
    else
      total += numerator[j] * binomial(d - jj + denominator_power - 1, denominator_power - 1);
  }
  return total;
}

std::string HilbertSeries::to_string() const {
  if (is_zero()) return "0";
  std::string num;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    long long c = numerator[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (num.empty())
      num += neg ? "-" : "";
    else
      num += neg ? " - " : " + ";
    const std::string q = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
    if (q.empty())
      num += std::to_string(c);
    else
      num += (c == 1 ? "" : std::to_string(c) + "*") + q;
  }
  if (denominator_power == 0) return num;
  std::string den = denominator_power == 1 ? "(1 - q)" : "(1 - q)^" + std::to_string(denominator_power);
  return (numerator.size() == 1 && numerator[0] > 0 ? num : "(" + num + ")") + "/" + den;
}

HilbertSeries hilbert_series_of_monomial_ideal(std::size_t nvars,
                                               std::span<const Monomial> generators) {
  HilbertSeries hs;
  hs.numerator = hilbert_numerator({generators.begin(), generators.end()});
  if (hs.numerator.empty()) return hs;
  hs.denominator_power = static_cast<int>(nvars);
  // Cancel (1 - q) factors: N(1) == 0 means (1 - q) divides N.
  while (hs.denominator_power > 0 &&
         std::accumulate(hs.numerator.begin(), hs.numerator.end(), 0LL) == 0) {
    std::vector<long long> m(hs.numerator.size() - 1);
    long long run = 0;
    for (std::size_t k = 0; k + 1 < hs.numerator.size(); ++k) {
      run += hs.numerator[k];
      m[k] = run;
    }
    poly_trim(m);
    hs.numerator = std::move(m);
    --hs.denominator_power;
  }
  return hs;
}

GroebnerBasis::GroebnerBasis(std::size_t nvars, std::vector<MultiPoly> reduced)
    : nvars_(nvars), polys_(std::move(reduced)) {
  for (const auto& p : polys_) leads_.push_back(p.lead_monomial());
}

bool GroebnerBasis::is_unit() const noexcept {
  return polys_.size() == 1 && polys_.front().is_constant();
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& p) const {
  MultiPoly rem(nvars_);
  MultiPoly cur = p;
  auto& rem_terms = rem.mutable_terms();
  while (!cur.is_zero()) {
    const auto& lead = cur.terms().front();
    const MultiPoly* reducer = nullptr;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (leads_[i].divides(lead.mono)) {
        reducer = &polys_[i];
        break;
      }
    if (!reducer) {
      rem_terms.push_back(lead);
      cur.mutable_terms().erase(cur.mutable_terms().begin());
      continue;
    }
    // Reducers are monic, so subtracting c*m*g cancels the lead.
    const FieldElem c = lead.coeff;
    cur = MultiPoly::combine(FieldElem::one(), cur, c,
                             reducer->lead_monomial().quotient_of(lead.mono), *reducer);
  }
  return rem;
}

bool GroebnerBasis::is_standard(const Monomial& m) const noexcept {
  return std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
}

bool GroebnerBasis::is_finite_dimensional() const noexcept {
  if (is_unit()) return true;
  for (std::size_t v = 0; v < nvars_; ++v) {
    bool has_pure_power = std::any_of(leads_.begin(), leads_.end(), [&](const Monomial& l) {
      return l[v] > 0 && l[v] == l.degree();
    });
    if (!has_pure_power) return false;
  }
  return true;
}

std::vector<Monomial> GroebnerBasis::standard_monomials(std::optional<int> degree_cap) const {
  if (!degree_cap && !is_finite_dimensional())
    throw InfiniteDimensional("quotient has infinitely many standard monomials; supply a degree cap");
  std::vector<Monomial> out;
  if (is_unit()) return out;
  std::vector<Monomial> layer{Monomial(nvars_)};
  int degree = 0;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), std::greater<>());
    out.insert(out.end(), layer.begin(), layer.end());
    if (degree_cap && degree >= *degree_cap) break;
    std::set<Monomial> next;
    for (const auto& m : layer)
      for (std::size_t v = 0; v < nvars_; ++v) {
        Monomial up = m * Monomial::variable(nvars_, static_cast<int>(v));
        if (is_standard(up)) next.insert(std::move(up));
      }
    layer.assign(next.begin(), next.end());
    ++degree;
  }
  return out;
}

HilbertSeries GroebnerBasis::hilbert_series() const {
  return hilbert_series_of_monomial_ideal(nvars_, leads_);
}

GroebnerBasis buchberger(std::size_t nvars, std::span<const MultiPoly> generators,
                         const BuchbergerOptions& opts) {
  Engine engine(nvars, opts);
  const GroebnerBasis unit(nvars, {MultiPoly::constant(nvars, FieldElem::one())});
  // Linear generators first: they are cheap and shrink everything after.
  std::vector<const MultiPoly*> order;
  for (const auto& g : generators)
    if (!g.is_zero()) order.push_back(&g);
  std::stable_sort(order.begin(), order.end(), [](const MultiPoly* a, const MultiPoly* b) {
    return a->degree() < b->degree();
  });
  for (const MultiPoly* g : order)
    if (!engine.insert(to_primitive_ring(*g))) return unit;
  if (!engine.run()) return unit;
  return GroebnerBasis(nvars, engine.reduced_basis());
}

bool ideal_equal(std::size_t nvars, std::span<const MultiPoly> a, std::span<const MultiPoly> b,
                 const BuchbergerOptions& opts) {
  const GroebnerBasis ga = buchberger(nvars, a, opts);
  const GroebnerBasis gb = buchberger(nvars, b, opts);
  for (const auto& p : a)
    if (!gb.contains(p)) return false;
  for (const auto& p : b)
    if (!ga.contains(p)) return false;
  return true;
}

}  // namespace hfk
