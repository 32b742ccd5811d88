#include "tracediv/ramified.hpp"

#include <algorithm>
#include <string>

namespace tracediv {

RamifiedRing::RamifiedRing(const WittRing& witt) : witt_(&witt), p_(witt.tower().p()) {
  if (p_ > 1024)
    fail(ErrorCode::TableLimitExceeded, "ramified basis rank p-1 too large for desk scale");
  // E(T) = ((1+T)^p - 1)/T has coefficient binom(p, i+1) at T^i, monic at p-1.
  // Pascal's triangle mod p^N keeps the coefficients exact for any p.
  const uint64_t M = witt.modulus();
  std::vector<uint64_t> row = {1};
  for (int n = 1; n <= p_; ++n) {
    std::vector<uint64_t> next(n + 1, 1);
    for (int k = 1; k < n; ++k) {
      next[k] = row[k - 1] + row[k];
      if (next[k] >= M) next[k] -= M;
    }
    row = std::move(next);
  }
  eisenstein_.assign(p_, 0);
  for (int i = 0; i < p_; ++i) eisenstein_[i] = static_cast<long long>(row[i + 1]);
}

void RamifiedRing::check(const RamifiedElement& a) const {
  if (static_cast<int>(a.coords.size()) != p_ - 1)
    fail(ErrorCode::PrecisionMismatch, "ramified coordinate count mismatch");
}

RamifiedElement RamifiedRing::zero() const {
  return RamifiedElement{std::vector<WittElement>(p_ - 1, witt_->zero())};
}

RamifiedElement RamifiedRing::from_integer(long long v) const {
  RamifiedElement z = zero();
  z.coords[0] = witt_->from_integer(v);
  return z;
}

RamifiedElement RamifiedRing::from_witt(const WittElement& w) const {
  RamifiedElement z = zero();
  z.coords[0] = w;
  return z;
}

std::vector<WittElement> RamifiedRing::reduce(std::vector<WittElement> poly) const {
  // Rewrite pi^d for d >= p-1 via pi^{p-1} = -sum_{i<p-1} binom(p,i+1) pi^i.
  for (int d = static_cast<int>(poly.size()) - 1; d >= p_ - 1; --d) {
    WittElement c = poly[d];
    poly[d] = witt_->zero();
    bool zero = std::all_of(c.c.begin(), c.c.end(), [](uint64_t x) { return x == 0; });
    if (zero) continue;
    for (int i = 0; i < p_ - 1; ++i) {
      // subtract binom(p, i+1) * c at degree d - (p-1) + i
      poly[d - (p_ - 1) + i] =
          witt_->sub(poly[d - (p_ - 1) + i], witt_->int_scale(c, eisenstein_[i]));
    }
  }
  poly.resize(p_ - 1, witt_->zero());
  return poly;
}

RamifiedElement RamifiedRing::pi() const {
  std::vector<WittElement> poly(std::max(2, p_ - 1), witt_->zero());
  poly[1] = witt_->one();
  return RamifiedElement{reduce(std::move(poly))};
}

RamifiedElement RamifiedRing::xi_p() const { return add(one(), pi()); }

RamifiedElement RamifiedRing::add(const RamifiedElement& a, const RamifiedElement& b) const {
  check(a);
  check(b);
  RamifiedElement out = a;
  for (int i = 0; i < p_ - 1; ++i) out.coords[i] = witt_->add(out.coords[i], b.coords[i]);
  return out;
}

RamifiedElement RamifiedRing::sub(const RamifiedElement& a, const RamifiedElement& b) const {
  check(a);
  check(b);
  RamifiedElement out = a;
  for (int i = 0; i < p_ - 1; ++i) out.coords[i] = witt_->sub(out.coords[i], b.coords[i]);
  return out;
}

RamifiedElement RamifiedRing::neg(const RamifiedElement& a) const {
  check(a);
  RamifiedElement out = a;
  for (auto& c : out.coords) c = witt_->neg(c);
  return out;
}

RamifiedElement RamifiedRing::mul(const RamifiedElement& a, const RamifiedElement& b) const {
  check(a);
  check(b);
  const int n = p_ - 1;
  std::vector<WittElement> conv(2 * n - 1, witt_->zero());
  for (int i = 0; i < n; ++i) {
    bool zero = std::all_of(a.coords[i].c.begin(), a.coords[i].c.end(),
                            [](uint64_t x) { return x == 0; });
    if (zero) continue;
    for (int j = 0; j < n; ++j)
      conv[i + j] = witt_->add(conv[i + j], witt_->mul(a.coords[i], b.coords[j]));
  }
  return RamifiedElement{reduce(std::move(conv))};
}

RamifiedElement RamifiedRing::int_scale(const RamifiedElement& a, long long s) const {
  check(a);
  RamifiedElement out = a;
  for (auto& c : out.coords) c = witt_->int_scale(c, s);
  return out;
}

RamifiedElement RamifiedRing::pow(RamifiedElement base, uint64_t exp) const {
  check(base);
  RamifiedElement r = one();
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

bool RamifiedRing::is_unit(const RamifiedElement& a) const {
  check(a);
  return !witt_->reduce(a.coords[0]).is_zero();
}

RamifiedElement RamifiedRing::unit_div(const RamifiedElement& a, const RamifiedElement& b) const {
  check(a);
  check(b);
  if (!is_unit(b)) fail(ErrorCode::NonUnitDivisor, "divisor has positive pi-valuation");
  // z0 = T(residue(b)^-1) inverts b mod pi; Newton squares the error.
  const FieldElement r = witt_->reduce(b.coords[0]);
  RamifiedElement z = from_witt(witt_->teichmuller(witt_->tower().inv(r)));
  const RamifiedElement two = from_integer(2);
  const RamifiedElement one_ = one();
  int rounds = 2;
  for (int range = pi_precision(); range > 1; range /= 2) ++rounds;
  for (int i = 0; i < rounds; ++i) {
    const RamifiedElement bz = mul(b, z);
    if (bz == one_) return mul(a, z);
    z = mul(z, sub(two, bz));
  }
  if (mul(b, z) == one_) return mul(a, z);
  fail(ErrorCode::NonConvergence, "unit inversion did not stabilize");
}

Valuation RamifiedRing::pi_valuation(const RamifiedElement& a, int cap_pi) const {
  check(a);
  const int N = witt_->precision();
  if (cap_pi > (p_ - 1) * (N - 1))
    fail(ErrorCode::InsufficientPrecision, "cap_pi exceeds (p-1)*(N-1)");
  long long best = -1;
  for (int i = 0; i < p_ - 1; ++i) {
    const Valuation v = witt_->capped_valuation(a.coords[i], N);
    if (!v.is_finite()) continue;  // term >= (p-1)N + i > cap_pi
    const long long term = (p_ - 1) * v.integer() + i;
    if (best < 0 || term < best) best = term;
  }
  if (best < 0 || best >= cap_pi) return Valuation::at_least(cap_pi, p_ - 1);
  return Valuation::finite(best, p_ - 1);
}

int default_gauss_precision(const FieldTower& tower) { return tower.e() + 3; }

RamifiedElement gauss_sum(const RamifiedRing& ring, uint64_t i) {
  const FieldTower& tower = ring.witt().tower();
  if (i > tower.q() - 2) fail(ErrorCode::ConfigError, "character index out of range");
  const RamifiedElement xi = ring.xi_p();
  RamifiedElement acc = ring.zero();
  for (const FieldElement& x : tower.enumerate(FieldLevel::Base)) {
    if (x.is_zero()) continue;
    const int tr = tower.prime_value(tower.trace_base_to_prime(x));
    const FieldElement xpow = tower.pow(x, -static_cast<long long>(i));
    RamifiedElement term = ring.pow(xi, static_cast<uint64_t>(tr));
    term = ring.mul(term, ring.from_witt(ring.witt().teichmuller(xpow)));
    acc = ring.add(acc, term);
  }
  return acc;
}

GaussSumTable lambda_table(const RamifiedRing& ring) {
  const FieldTower& tower = ring.witt().tower();
  const uint64_t q = tower.q();
  GaussSumTable table;
  table.p = tower.p();
  table.e = tower.e();
  table.lambda.reserve(q);
  table.lambda.push_back(ring.one());
  const RamifiedElement qm1 = ring.from_integer(static_cast<long long>(q - 1));
  for (uint64_t i = 1; i <= q - 2; ++i)
    table.lambda.push_back(ring.unit_div(gauss_sum(ring, i), qm1));
  if (q >= 2)
    table.lambda.push_back(ring.unit_div(ring.from_integer(-static_cast<long long>(q)), qm1));
  return table;
}

FourierCheckReport verify_fourier_expansion(const FieldTower& tower, int precision) {
  if (tower.q() > 64) fail(ErrorCode::TableLimitExceeded, "fourier check is quadratic in q");
  const WittRing witt(tower, precision);
  const RamifiedRing ring(witt);
  const GaussSumTable table = lambda_table(ring);
  const RamifiedElement xi = ring.xi_p();

  FourierCheckReport report;
  for (const FieldElement& x : tower.enumerate(FieldLevel::Base)) {
    const int tr = tower.prime_value(tower.trace_base_to_prime(x));
    const RamifiedElement lhs = ring.pow(xi, static_cast<uint64_t>(tr));
    RamifiedElement rhs = ring.zero();
    for (uint64_t i = 0; i < tower.q(); ++i) {
      // T(x)^i = T(x^i), with 0^0 = 1
      const WittElement t = witt.teichmuller(tower.pow(x, static_cast<long long>(i)));
      rhs = ring.add(rhs, ring.mul(table.lambda[i], ring.from_witt(t)));
    }
    ++report.checked;
    if (!(lhs == rhs)) {
      report.pass = false;
      report.violations.push_back(x);
    }
  }
  return report;
}

}  // namespace tracediv
