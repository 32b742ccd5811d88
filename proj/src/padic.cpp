#include "tracediv/padic.hpp"

#include <string>

namespace tracediv {
namespace {

uint64_t mod_pow64(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = static_cast<unsigned __int128>(r) * base % mod;
    base = static_cast<unsigned __int128>(base) * base % mod;
    exp >>= 1;
  }
  return r;
}

}  // namespace

int digit_sum(uint64_t a, int p) {
  int s = 0;
  while (a) {
    s += static_cast<int>(a % p);
    a /= p;
  }
  return s;
}

uint64_t tau_shift(uint64_t x, uint64_t h, int p, int em) {
  uint64_t Q = 1;
  for (int i = 0; i < em; ++i) Q *= static_cast<uint64_t>(p);
  if (x == 0 || x == Q - 1) return x;
  if (x > Q - 1) fail(ErrorCode::ConfigError, "tau_shift input out of range");
  const uint64_t L = Q - 1;
  return static_cast<unsigned __int128>(x) * mod_pow64(static_cast<uint64_t>(p), h, L) % L;
}

WittRing::WittRing(const FieldTower& tower, int precision) : tower_(&tower), precision_(precision) {
  if (precision < 1) fail(ErrorCode::InsufficientPrecision, "precision must be >= 1");
  modulus_ = 1;
  for (int i = 0; i < precision; ++i) {
    if (modulus_ > (uint64_t{1} << 31) / tower.p())
      fail(ErrorCode::TableLimitExceeded, "p^N exceeds the supported coefficient range");
    modulus_ *= static_cast<uint64_t>(tower.p());
  }
  lifted_poly_.assign(tower.modulus().begin(), tower.modulus().end());
}

void WittRing::check(const WittElement& a) const {
  if (a.precision != precision_ || static_cast<int>(a.c.size()) != tower_->em())
    fail(ErrorCode::PrecisionMismatch,
         "element precision " + std::to_string(a.precision) + " vs ring " + std::to_string(precision_));
}

WittElement WittRing::zero() const {
  return WittElement{std::vector<uint64_t>(tower_->em(), 0), precision_};
}

WittElement WittRing::from_integer(long long v) const {
  WittElement z = zero();
  const long long M = static_cast<long long>(modulus_);
  z.c[0] = static_cast<uint64_t>(((v % M) + M) % M);
  return z;
}

WittElement WittRing::add(const WittElement& a, const WittElement& b) const {
  check(a);
  check(b);
  WittElement out = a;
  for (size_t i = 0; i < out.c.size(); ++i) {
    out.c[i] += b.c[i];
    if (out.c[i] >= modulus_) out.c[i] -= modulus_;
  }
  return out;
}

WittElement WittRing::sub(const WittElement& a, const WittElement& b) const {
  check(a);
  check(b);
  WittElement out = a;
  for (size_t i = 0; i < out.c.size(); ++i) {
    out.c[i] = out.c[i] >= b.c[i] ? out.c[i] - b.c[i] : out.c[i] + modulus_ - b.c[i];
  }
  return out;
}

WittElement WittRing::neg(const WittElement& a) const {
  check(a);
  WittElement out = a;
  for (auto& x : out.c) x = x == 0 ? 0 : modulus_ - x;
  return out;
}

WittElement WittRing::mul(const WittElement& a, const WittElement& b) const {
  check(a);
  check(b);
  const int n = tower_->em();
  std::vector<unsigned __int128> conv(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < n; ++j) conv[i + j] += static_cast<unsigned __int128>(a.c[i]) * b.c[j];
  }
  std::vector<uint64_t> red(2 * n - 1);
  for (int i = 0; i < 2 * n - 1; ++i) red[i] = static_cast<uint64_t>(conv[i] % modulus_);
  for (int d = 2 * n - 2; d >= n; --d) {
    const uint64_t c = red[d];
    if (c == 0) continue;
    for (int j = 0; j < n; ++j) {
      const uint64_t t = c * lifted_poly_[j] % modulus_;
      red[d - n + j] = red[d - n + j] >= t ? red[d - n + j] - t : red[d - n + j] + modulus_ - t;
    }
    red[d] = 0;
  }
  WittElement out = zero();
  for (int i = 0; i < n; ++i) out.c[i] = red[i];
  return out;
}

WittElement WittRing::int_scale(const WittElement& a, long long s) const {
  check(a);
  const long long M = static_cast<long long>(modulus_);
  const uint64_t f = static_cast<uint64_t>(((s % M) + M) % M);
  WittElement out = a;
  for (auto& x : out.c) x = x * f % modulus_;
  return out;
}

WittElement WittRing::pow(WittElement base, uint64_t exp) const {
  check(base);
  WittElement r = one();
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

WittElement WittRing::teichmuller(FieldElement a) const {
  if (a.is_zero()) return zero();
  WittElement t = zero();
  const std::vector<int> digits = tower_->coeffs(a);
  for (int i = 0; i < tower_->em(); ++i) t.c[i] = static_cast<uint64_t>(digits[i]);
  const int p = tower_->p();
  for (int round = 0; round < precision_ + 2; ++round) {
    WittElement next = t;
    for (int i = 0; i < tower_->em(); ++i) next = pow(next, static_cast<uint64_t>(p));
    if (next == t) return t;
    t = next;
  }
  fail(ErrorCode::NonConvergence, "Teichmuller iteration did not stabilize");
}

FieldElement WittRing::reduce(const WittElement& a) const {
  check(a);
  std::vector<int> digits(tower_->em());
  for (int i = 0; i < tower_->em(); ++i) digits[i] = static_cast<int>(a.c[i] % tower_->p());
  return tower_->from_coeffs(digits);
}

Valuation WittRing::capped_valuation(const WittElement& a, int cap) const {
  check(a);
  if (cap > precision_) fail(ErrorCode::InsufficientPrecision, "cap exceeds element precision");
  int best = precision_;  // coefficient 0 mod p^N contributes >= N
  for (uint64_t c : a.c) {
    if (c == 0) continue;
    int v = 0;
    while (c % tower_->p() == 0) {
      c /= tower_->p();
      ++v;
    }
    best = std::min(best, v);
    if (best == 0) break;
  }
  if (best >= cap) return Valuation::at_least(cap);
  return Valuation::finite(best);
}

Valuation WittRing::vector_valuation(std::span<const WittElement> v, int cap) const {
  Valuation out = Valuation::at_least(cap);
  for (const WittElement& x : v) out = Valuation::min(out, capped_valuation(x, cap));
  return out;
}

ExponentTuple ExponentTuple::of(std::vector<uint32_t> entries, int p) {
  ExponentTuple t;
  t.entries = std::move(entries);
  for (uint32_t r : t.entries) {
    t.total += r;
    t.digit_total += digit_sum(r, p);
  }
  return t;
}

}  // namespace tracediv
