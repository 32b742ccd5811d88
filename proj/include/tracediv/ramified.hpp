#pragma once

#include <vector>

#include "tracediv/padic.hpp"

namespace tracediv {

// Element of the totally ramified extension, written in the pi-basis
// sum_{i=0}^{p-2} a_i pi^i with Witt coordinates a_i and pi = xi_p - 1.
struct RamifiedElement {
  std::vector<WittElement> coords;

  friend bool operator==(const RamifiedElement&, const RamifiedElement&) = default;
};

// Arithmetic modulo the Eisenstein relation E(pi) = ((1+pi)^p - 1)/pi = 0.
// The pi-adic working range is (p-1)*N for Witt precision N. For p = 2 the
// basis has rank 1 and pi = -2; the code paths are uniform.
class RamifiedRing {
 public:
  explicit RamifiedRing(const WittRing& witt);

  const WittRing& witt() const { return *witt_; }
  int p() const { return p_; }
  int pi_precision() const { return (p_ - 1) * witt_->precision(); }

  RamifiedElement zero() const;
  RamifiedElement one() const { return from_integer(1); }
  RamifiedElement from_integer(long long v) const;
  RamifiedElement from_witt(const WittElement& w) const;
  RamifiedElement pi() const;
  RamifiedElement xi_p() const;  // 1 + pi, a primitive p-th root of unity

  RamifiedElement add(const RamifiedElement& a, const RamifiedElement& b) const;
  RamifiedElement sub(const RamifiedElement& a, const RamifiedElement& b) const;
  RamifiedElement neg(const RamifiedElement& a) const;
  RamifiedElement mul(const RamifiedElement& a, const RamifiedElement& b) const;
  RamifiedElement int_scale(const RamifiedElement& a, long long s) const;
  RamifiedElement pow(RamifiedElement base, uint64_t exp) const;

  // Exact division by a unit (pi-valuation zero divisor), by Newton iteration
  // from the Teichmuller lift of the residue inverse.
  RamifiedElement unit_div(const RamifiedElement& a, const RamifiedElement& b) const;

  bool is_unit(const RamifiedElement& a) const;

  // nu_p = nu_pi / (p-1) with nu_pi = min_i ((p-1) nu_p(a_i) + i); the basis
  // terms occupy distinct residues mod p-1, so the minimum is exact.
  // Returns AtLeast(cap_pi/(p-1)) when every term exceeds cap_pi.
  Valuation pi_valuation(const RamifiedElement& a, int cap_pi) const;

 private:
  void check(const RamifiedElement& a) const;
  std::vector<WittElement> reduce(std::vector<WittElement> poly) const;

  const WittRing* witt_;
  int p_;
  std::vector<long long> eisenstein_;  // binom(p, i+1) for i = 0..p-1
};

// Gauss sum g(T^{-i}) = sum_{x in F_q^x} xi_p^{Tr_{q/p}(x)} T(x)^{-i}, taken
// over the base-field level F_q of the ring's tower.
RamifiedElement gauss_sum(const RamifiedRing& ring, uint64_t i);

// Coefficients of the additive-character expansion in powers of T(x):
// lambda_0 = 1, lambda_i = g(T^{-i})/(q-1) for 0 < i < q-1,
// lambda_{q-1} = -q/(q-1).
struct GaussSumTable {
  int p = 0, e = 0;
  std::vector<RamifiedElement> lambda;  // size q
};

GaussSumTable lambda_table(const RamifiedRing& ring);

struct FourierCheckReport {
  bool pass = true;
  uint64_t checked = 0;
  std::vector<FieldElement> violations;
};

// Exhaustively asserts xi_p^{Tr(x)} = sum_i lambda_i T(x)^i over F_q.
FourierCheckReport verify_fourier_expansion(const FieldTower& tower, int precision);

// Default Witt precision for Gauss-sum work: separates every valuation the
// table can produce (max needed is e(p-1) at pi-scale).
int default_gauss_precision(const FieldTower& tower);

}  // namespace tracediv
