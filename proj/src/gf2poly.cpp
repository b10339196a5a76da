#include "hfk/gf2poly.hpp"

#include <algorithm>
#include <bit>

#include "hfk/errors.hpp"

namespace hfk {

namespace {

// Carry-less 64x64 -> 128 bit product.
inline void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo,
                    std::uint64_t& hi) {
  lo = 0;
  hi = 0;
  if (std::popcount(a) > std::popcount(b)) std::swap(a, b);
  while (a) {
    const int i = std::countr_zero(a);
    a &= a - 1;
    lo ^= b << i;
    if (i) hi ^= b >> (64 - i);
  }
}

}  // namespace

F2Poly::F2Poly(std::uint64_t bits) {
  if (bits) limbs_.push_back(bits);
}

F2Poly F2Poly::t_pow(int k) {
  F2Poly p;
  p.limbs_.assign(static_cast<std::size_t>(k / 64 + 1), 0);
  p.limbs_.back() = std::uint64_t{1} << (k % 64);
  return p;
}

F2Poly F2Poly::one_plus_t_pow(int k) { return t_pow(k) + one(); }

int F2Poly::degree() const noexcept {
  if (limbs_.empty()) return -1;
  return static_cast<int>(64 * (limbs_.size() - 1)) + 63 -
         std::countl_zero(limbs_.back());
}

bool F2Poly::coeff(int i) const noexcept {
  const auto limb = static_cast<std::size_t>(i / 64);
  if (i < 0 || limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 64)) & 1u;
}

int F2Poly::t_valuation() const noexcept {
  for (std::size_t i = 0; i < limbs_.size(); ++i)
    if (limbs_[i]) return static_cast<int>(64 * i) + std::countr_zero(limbs_[i]);
  return 0;
}

void F2Poly::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

F2Poly& F2Poly::operator+=(const F2Poly& rhs) {
  if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < rhs.limbs_.size(); ++i) limbs_[i] ^= rhs.limbs_[i];
  trim();
  return *this;
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.limbs_.size() == 1 && a.limbs_[0] == 1) return b;
  if (b.limbs_.size() == 1 && b.limbs_[0] == 1) return a;
  F2Poly r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    if (!a.limbs_[i]) continue;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t lo, hi;
      clmul64(a.limbs_[i], b.limbs_[j], lo, hi);
      r.limbs_[i + j] ^= lo;
      r.limbs_[i + j + 1] ^= hi;
    }
  }
  r.trim();
  return r;
}

F2Poly F2Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  const std::size_t words = static_cast<std::size_t>(k / 64);
  const int bits = k % 64;
  F2Poly r;
  r.limbs_.assign(limbs_.size() + words + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    r.limbs_[i + words] ^= limbs_[i] << bits;
    if (bits) r.limbs_[i + words + 1] ^= limbs_[i] >> (64 - bits);
  }
  r.trim();
  return r;
}

void F2Poly::divmod(const F2Poly& a, const F2Poly& b, F2Poly& q, F2Poly& r) {
  if (b.is_zero()) throw DivideByZero("polynomial division by zero");
  const int db = b.degree();
  r = a;
  q = F2Poly{};
  int dr = r.degree();
  if (dr < db) return;
  q.limbs_.assign(static_cast<std::size_t>((dr - db) / 64 + 1), 0);
  // Fast path: both fit in a single limb.
  if (r.limbs_.size() == 1) {
    std::uint64_t rv = r.limbs_[0];
    const std::uint64_t bv = b.limbs_[0];
    std::uint64_t qv = 0;
    while (dr >= db) {
      const int s = dr - db;
      qv |= std::uint64_t{1} << s;
      rv ^= bv << s;
      dr = rv ? 63 - std::countl_zero(rv) : -1;
    }
    q.limbs_[0] = qv;
    r.limbs_.assign(1, rv);
    q.trim();
    r.trim();
    return;
  }
  while (dr >= db) {
    const int s = dr - db;
    q.limbs_[static_cast<std::size_t>(s / 64)] |= std::uint64_t{1} << (s % 64);
    r += b.shifted(s);
    dr = r.degree();
  }
  q.trim();
}

F2Poly operator/(const F2Poly& a, const F2Poly& b) {
  F2Poly q, r;
  F2Poly::divmod(a, b, q, r);
  return q;
}

F2Poly operator%(const F2Poly& a, const F2Poly& b) {
  F2Poly q, r;
  F2Poly::divmod(a, b, q, r);
  return r;
}

F2Poly gcd(F2Poly a, F2Poly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_one() || b.is_one()) return F2Poly::one();
  // Pull out the common power of t first; it is frequent and cheap.
  const int va = a.t_valuation(), vb = b.t_valuation();
  const int common = std::min(va, vb);
  if (va) a = a / F2Poly::t_pow(va);
  if (vb) b = b / F2Poly::t_pow(vb);
  while (!b.is_zero()) {
    F2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return common ? a.shifted(common) : a;
}

std::strong_ordering operator<=>(const F2Poly& a, const F2Poly& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;)
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  return std::strong_ordering::equal;
}

std::string F2Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(i)) continue;
    if (!out.empty()) out += " + ";
    if (i == 0)
      out += "1";
    else if (i == 1)
      out += var;
    else
      out += std::string(1, var) + "^" + std::to_string(i);
  }
  return out;
}

std::size_t F2Poly::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto l : limbs_) h = (h ^ l) * 0x100000001b3ull;
  return h;
}

}  // namespace hfk
