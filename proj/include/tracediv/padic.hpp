#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tracediv/field_tower.hpp"
#include "tracediv/valuation.hpp"

namespace tracediv {

// Sum of base-p digits of a.
int digit_sum(uint64_t a, int p);

// p-ary cyclic shift on [0, Q-1], Q = p^em: tau(0) = 0, tau(Q-1) = Q-1, else
// the representative of p^h * x mod (Q-1) in [1, Q-2].
uint64_t tau_shift(uint64_t x, uint64_t h, int p, int em);

// Residue in (Z/p^N)[y]/(f~) where f~ is the naive lift of the tower modulus.
// Coefficients are canonical in [0, p^N).
struct WittElement {
  std::vector<uint64_t> c;
  int precision = 0;

  friend bool operator==(const WittElement&, const WittElement&) = default;
};

// Truncated arithmetic in the unramified extension at precision p^N.
// Immutable; operations are pure. The tower must outlive the ring.
class WittRing {
 public:
  WittRing(const FieldTower& tower, int precision);

  const FieldTower& tower() const { return *tower_; }
  int precision() const { return precision_; }
  uint64_t modulus() const { return modulus_; }

  WittElement zero() const;
  WittElement one() const { return from_integer(1); }
  WittElement from_integer(long long v) const;

  WittElement add(const WittElement& a, const WittElement& b) const;
  WittElement sub(const WittElement& a, const WittElement& b) const;
  WittElement neg(const WittElement& a) const;
  WittElement mul(const WittElement& a, const WittElement& b) const;
  WittElement int_scale(const WittElement& a, long long s) const;
  WittElement pow(WittElement base, uint64_t exp) const;

  // Unique multiplicative lift: t = a^ (naive lift) iterated t <- t^Q to its
  // fixed point; satisfies t^Q = t exactly at precision p^N.
  WittElement teichmuller(FieldElement a) const;

  // Reduction mod p back to the residue field.
  FieldElement reduce(const WittElement& a) const;

  // Largest v < cap with p^v dividing every coefficient; AtLeast(cap) when the
  // residue vanishes mod p^cap. Truncation never certifies an exact zero.
  Valuation capped_valuation(const WittElement& a, int cap) const;
  Valuation vector_valuation(std::span<const WittElement> v, int cap) const;

 private:
  void check(const WittElement& a) const;

  const FieldTower* tower_;
  int precision_;
  uint64_t modulus_;
  std::vector<uint64_t> lifted_poly_;  // naive lift of the tower modulus
};

// Integer vector r indexing the criterion's minimization, with cached total
// |r| and digit-sum statistics.
struct ExponentTuple {
  std::vector<uint32_t> entries;
  uint64_t total = 0;    // |r|
  int digit_total = 0;   // sum of S_p(r_i)

  static ExponentTuple of(std::vector<uint32_t> entries, int p);

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
};

}  // namespace tracediv
