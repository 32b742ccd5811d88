#include "tracediv/field_tower.hpp"

#include <algorithm>
#include <string>

namespace tracediv {
namespace {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = static_cast<unsigned __int128>(r) * base % mod;
    base = static_cast<unsigned __int128>(base) * base % mod;
    exp >>= 1;
  }
  return r;
}

// Dense residues mod a monic degree-n polynomial over F_p, constant first.
using Residue = std::vector<int>;

Residue residue_one(int n) {
  Residue r(n, 0);
  if (n > 0) r[0] = 1;
  return r;
}

Residue residue_x(const std::vector<int>& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  Residue r(n, 0);
  if (n == 1) {
    r[0] = (p - f[0]) % p;  // x = -c0 mod (x + c0)
  } else {
    r[1] = 1;
  }
  return r;
}

Residue residue_mul(const Residue& a, const Residue& b, const std::vector<int>& f, int p) {
  const int n = static_cast<int>(a.size());
  std::vector<long long> conv(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) conv[i + j] += static_cast<long long>(a[i]) * b[j];
  }
  for (int d = 2 * n - 2; d >= n; --d) {
    const long long c = conv[d] % p;
    if (c == 0) continue;
    for (int j = 0; j < n; ++j) conv[d - n + j] -= c * f[j];
    conv[d] = 0;
  }
  Residue out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(((conv[i] % p) + p) % p);
  return out;
}

Residue residue_pow(Residue base, uint64_t exp, const std::vector<int>& f, int p) {
  Residue r = residue_one(static_cast<int>(base.size()));
  while (exp) {
    if (exp & 1) r = residue_mul(r, base, f, p);
    base = residue_mul(base, base, f, p);
    exp >>= 1;
  }
  return r;
}

// x^(p^j) mod f via repeated p-th powers.
Residue frobenius_of_x(const std::vector<int>& f, int p, int j) {
  Residue t = residue_x(f, p);
  for (int i = 0; i < j; ++i) t = residue_pow(t, static_cast<uint64_t>(p), f, p);
  return t;
}

bool poly_irreducible(const std::vector<int>& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (frobenius_of_x(f, p, n) != residue_x(f, p)) return false;
  for (uint64_t l : distinct_prime_factors(static_cast<uint64_t>(n))) {
    if (frobenius_of_x(f, p, static_cast<int>(n / l)) == residue_x(f, p)) return false;
  }
  return true;
}

bool root_is_primitive(const std::vector<int>& f, int p, uint64_t group_order) {
  const Residue x = residue_x(f, p);
  const int n = static_cast<int>(f.size()) - 1;
  if (x == Residue(n, 0)) return false;
  if (residue_pow(x, group_order, f, p) != residue_one(n)) return false;
  for (uint64_t l : distinct_prime_factors(group_order)) {
    if (residue_pow(x, group_order / l, f, p) == residue_one(n)) return false;
  }
  return true;
}

std::string poly_str(const std::vector<int>& f) {
  std::string s = "[";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "]";
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReduciblePoly: return "ReduciblePoly";
    case ErrorCode::NonPrimitiveRoot: return "NonPrimitiveRoot";
    case ErrorCode::TableLimitExceeded: return "TableLimitExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PrecisionMismatch: return "PrecisionMismatch";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NonUnitDivisor: return "NonUnitDivisor";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EnumerationLimitExceeded: return "EnumerationLimitExceeded";
    case ErrorCode::NonCoprimeGroupOrder: return "NonCoprimeGroupOrder";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Error";
}

FieldTower FieldTower::build(int p, int e, int m, std::optional<std::vector<int>> poly,
                             uint64_t table_limit) {
  if (!is_prime(static_cast<uint64_t>(p))) fail(ErrorCode::NonPrime, "p = " + std::to_string(p));
  if (e < 1 || m < 1) fail(ErrorCode::ConfigError, "e and m must be positive");

  FieldTower t;
  t.p_ = p;
  t.e_ = e;
  t.m_ = m;
  t.em_ = e * m;

  uint64_t Q = 1;
  for (int i = 0; i < t.em_; ++i) {
    Q *= static_cast<uint64_t>(p);
    if (Q > table_limit)
      fail(ErrorCode::TableLimitExceeded,
           "p^(e*m) exceeds table limit " + std::to_string(table_limit));
  }
  t.order_ = Q;
  uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= static_cast<uint64_t>(p);
  t.q_ = q;

  if (poly) {
    std::vector<int>& f = *poly;
    if (static_cast<int>(f.size()) != t.em_ + 1)
      fail(ErrorCode::ConfigError, "poly must have degree e*m = " + std::to_string(t.em_));
    for (int& c : f) c = ((c % p) + p) % p;
    if (f.back() != 1) fail(ErrorCode::ConfigError, "poly must be monic");
    if (!poly_irreducible(f, p)) fail(ErrorCode::ReduciblePoly, poly_str(f));
    if (!root_is_primitive(f, p, Q - 1)) {
      // Scalar multiples c*x of the canonical root may be primitive; we report
      // rather than substituting one.
      bool scaled_exists = false;
      for (int c = 2; c < p && !scaled_exists; ++c) {
        std::vector<int> g(f.size());
        // minimal poly of c*root: f(x/c) * c^em, i.e. coeff_i * c^{em-i}
        long long scale = 1;
        for (int i = t.em_; i >= 0; --i) {
          g[i] = static_cast<int>((f[i] * scale) % p);
          scale = scale * c % p;
        }
        scaled_exists = root_is_primitive(g, p, Q - 1);
      }
      fail(ErrorCode::NonPrimitiveRoot,
           poly_str(f) + (scaled_exists ? " (a primitive scaling exists; supply it explicitly)"
                                        : " (no primitive scaling exists)"));
    }
    t.poly_ = f;
  } else {
    // Deterministic search in integer-value order (monic, degree em).
    bool found = false;
    for (uint64_t v = Q; v < 2 * Q && !found; ++v) {
      std::vector<int> f(t.em_ + 1);
      uint64_t w = v;
      for (int i = 0; i <= t.em_; ++i) {
        f[i] = static_cast<int>(w % p);
        w /= p;
      }
      if (f[0] == 0) continue;  // x divides f
      if (!poly_irreducible(f, p)) continue;
      if (!root_is_primitive(f, p, Q - 1)) continue;
      t.poly_ = f;
      found = true;
    }
    if (!found) fail(ErrorCode::NonPrimitiveRoot, "no primitive polynomial found (internal)");
  }

  t.build_tables();
  return t;
}

void FieldTower::build_tables() {
  const uint64_t Q = order_;
  pow_rep_.assign(Q - 1, 0);
  log_of_.assign(Q, -1);

  std::vector<int> cur(em_, 0);
  cur[0] = 1;
  for (uint64_t i = 0; i < Q - 1; ++i) {
    uint32_t packed = 0;
    for (int j = em_ - 1; j >= 0; --j) packed = packed * static_cast<uint32_t>(p_) + cur[j];
    pow_rep_[i] = packed;
    if (log_of_[packed] != -1)
      fail(ErrorCode::NonPrimitiveRoot, "power table collision (root not primitive)");
    log_of_[packed] = static_cast<int32_t>(i);
    // cur *= x, reduced by the monic modulus
    const int lead = cur[em_ - 1];
    for (int j = em_ - 1; j >= 1; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (lead) {
      for (int j = 0; j < em_; ++j) cur[j] = ((cur[j] - lead * poly_[j]) % p_ + p_) % p_;
    }
  }
  if (log_of_[0] != -1) fail(ErrorCode::ReduciblePoly, "zero divisor in power table");

  prime_elems_.resize(p_);
  prime_elems_[0] = FieldElement::zero();
  prime_value_.reserve(p_);
  FieldElement acc = FieldElement::zero();
  for (int c = 1; c < p_; ++c) {
    acc = add(acc, one());
    prime_elems_[c] = acc;
    prime_value_[acc.code] = c;
  }
  minus_one_ = prime_elems_[p_ - 1];
}

FieldElement FieldTower::add(FieldElement a, FieldElement b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  uint32_t ra = pow_rep_[a.log()];
  uint32_t rb = pow_rep_[b.log()];
  uint32_t packed;
  if (p_ == 2) {
    packed = ra ^ rb;
  } else {
    packed = 0;
    uint32_t place = 1;
    for (int j = 0; j < em_; ++j) {
      const uint32_t da = ra % p_, db = rb % p_;
      uint32_t d = da + db;
      if (d >= static_cast<uint32_t>(p_)) d -= p_;
      packed += d * place;
      ra /= p_;
      rb /= p_;
      place *= p_;
    }
  }
  if (packed == 0) return FieldElement::zero();
  return FieldElement::from_log(static_cast<uint64_t>(log_of_[packed]));
}

FieldElement FieldTower::neg(FieldElement a) const {
  if (p_ == 2 || a.is_zero()) return a;
  return mul(a, minus_one_);
}

FieldElement FieldTower::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return FieldElement::zero();
  uint64_t l = a.log() + b.log();
  if (l >= order_ - 1) l -= order_ - 1;
  return FieldElement::from_log(l);
}

FieldElement FieldTower::inv(FieldElement a) const {
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  const uint64_t L = order_ - 1;
  return FieldElement::from_log((L - a.log()) % L);
}

FieldElement FieldTower::pow(FieldElement a, long long n) const {
  if (a.is_zero()) {
    if (n == 0) return one();  // 0^0 = 1
    if (n < 0) fail(ErrorCode::DivisionByZero, "negative power of zero");
    return FieldElement::zero();
  }
  const long long L = static_cast<long long>(order_ - 1);
  long long r = ((n % L) + L) % L;
  return FieldElement::from_log(static_cast<uint64_t>(a.log()) * r % L);
}

FieldElement FieldTower::frobenius(FieldElement a, int times) const {
  if (a.is_zero()) return a;
  const uint64_t L = order_ - 1;
  const uint64_t f = mod_pow(static_cast<uint64_t>(p_), static_cast<uint64_t>(times), L);
  return FieldElement::from_log(a.log() * f % L);
}

std::vector<int> FieldTower::coeffs(FieldElement a) const {
  std::vector<int> out(em_, 0);
  if (a.is_zero()) return out;
  uint32_t r = pow_rep_[a.log()];
  for (int j = 0; j < em_; ++j) {
    out[j] = static_cast<int>(r % p_);
    r /= p_;
  }
  return out;
}

FieldElement FieldTower::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > em_)
    fail(ErrorCode::ConfigError, "coefficient list longer than e*m");
  uint32_t packed = 0;
  uint32_t place = 1;
  for (int j = 0; j < em_; ++j) {
    const int d = j < static_cast<int>(c.size()) ? ((c[j] % p_) + p_) % p_ : 0;
    packed += static_cast<uint32_t>(d) * place;
    place *= p_;
  }
  if (packed == 0) return FieldElement::zero();
  return FieldElement::from_log(static_cast<uint64_t>(log_of_[packed]));
}

FieldElement FieldTower::trace_to_base(FieldElement a) const {
  FieldElement acc = a, t = a;
  for (int i = 1; i < m_; ++i) {
    t = frobenius(t, e_);
    acc = add(acc, t);
  }
  return acc;
}

FieldElement FieldTower::trace_to_prime(FieldElement a) const {
  FieldElement acc = a, t = a;
  for (int i = 1; i < em_; ++i) {
    t = frobenius(t);
    acc = add(acc, t);
  }
  return acc;
}

FieldElement FieldTower::trace_base_to_prime(FieldElement a) const {
  FieldElement acc = a, t = a;
  for (int i = 1; i < e_; ++i) {
    t = frobenius(t);
    acc = add(acc, t);
  }
  return acc;
}

bool FieldTower::in_base_field(FieldElement a) const {
  if (a.is_zero()) return true;
  return a.log() % ((order_ - 1) / (q_ - 1)) == 0;
}

bool FieldTower::in_prime_field(FieldElement a) const {
  if (a.is_zero()) return true;
  return a.log() % ((order_ - 1) / (p_ - 1)) == 0;
}

int FieldTower::prime_value(FieldElement a) const {
  if (a.is_zero()) return 0;
  auto it = prime_value_.find(a.code);
  if (it == prime_value_.end()) fail(ErrorCode::ConfigError, "element not in prime subfield");
  return it->second;
}

FieldElement FieldTower::from_prime_value(long long v) const {
  return prime_elems_[((v % p_) + p_) % p_];
}

uint64_t FieldTower::level_size(FieldLevel level) const {
  switch (level) {
    case FieldLevel::Prime: return static_cast<uint64_t>(p_);
    case FieldLevel::Base: return q_;
    case FieldLevel::Extension: return order_;
  }
  return 0;
}

std::vector<FieldElement> FieldTower::enumerate(FieldLevel level) const {
  const uint64_t size = level_size(level);
  const uint64_t step = (order_ - 1) / (size - 1);
  std::vector<FieldElement> out;
  out.reserve(size);
  out.push_back(FieldElement::zero());
  for (uint64_t i = 0; i < size - 1; ++i) out.push_back(FieldElement::from_log(i * step));
  return out;
}

}  // namespace tracediv
