#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tracediv/error.hpp"

namespace tracediv {

// Element of F_{p^em} in discrete-log form: 0, or log in [0, Q-2] with respect
// to the tower's primitive element.
struct FieldElement {
  uint32_t code = 0;  // 0 = zero element, otherwise log + 1

  bool is_zero() const { return code == 0; }
  uint32_t log() const { return code - 1; }

  static FieldElement zero() { return FieldElement{0}; }
  static FieldElement from_log(uint64_t log) { return FieldElement{static_cast<uint32_t>(log) + 1}; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.code < b.code; }
};

enum class FieldLevel { Prime, Base, Extension };  // F_p, F_q, F_{q^m}

// The tower F_p <= F_q <= F_{q^m} with q = p^e, realized as F_p[x]/(f) for a
// monic irreducible f of degree e*m whose canonical root is primitive.
// Immutable after construction; all operations are pure and thread-safe.
class FieldTower {
 public:
  static constexpr uint64_t kDefaultTableLimit = uint64_t{1} << 20;

  // poly, when given, lists coefficients constant-first (length e*m + 1, monic).
  // The default poly is the lexicographically smallest monic irreducible
  // (highest-degree coefficient compared first) with a primitive root.
  static FieldTower build(int p, int e, int m, std::optional<std::vector<int>> poly = std::nullopt,
                          uint64_t table_limit = kDefaultTableLimit);

  int p() const { return p_; }
  int e() const { return e_; }
  int m() const { return m_; }
  int em() const { return em_; }
  uint64_t q() const { return q_; }
  uint64_t order() const { return order_; }  // Q = p^{em}
  const std::vector<int>& modulus() const { return poly_; }

  FieldElement zero() const { return FieldElement::zero(); }
  FieldElement one() const { return FieldElement::from_log(0); }
  FieldElement generator() const { return FieldElement::from_log(1 % (order_ - 1)); }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, long long n) const;  // 0^0 = 1 by convention
  FieldElement frobenius(FieldElement a, int times = 1) const;

  // Coefficient vector (length em, constant first) of the residue representing a.
  std::vector<int> coeffs(FieldElement a) const;
  FieldElement from_coeffs(const std::vector<int>& c) const;

  FieldElement trace_to_base(FieldElement a) const;        // Tr_{q^m/q}
  FieldElement trace_to_prime(FieldElement a) const;       // Tr_{q^m/p}
  FieldElement trace_base_to_prime(FieldElement a) const;  // Tr_{q/p}, a in F_q

  bool in_base_field(FieldElement a) const;
  bool in_prime_field(FieldElement a) const;
  // Integer label in [0, p) of an element of the prime subfield.
  int prime_value(FieldElement a) const;
  FieldElement from_prime_value(long long v) const;

  uint64_t level_size(FieldLevel level) const;
  // ZERO first, then ascending log.
  std::vector<FieldElement> enumerate(FieldLevel level) const;

 private:
  FieldTower() = default;
  void build_tables();

  int p_ = 0, e_ = 0, m_ = 0, em_ = 0;
  uint64_t q_ = 0, order_ = 0;
  std::vector<int> poly_;               // constant first, monic, degree em
  std::vector<uint32_t> pow_rep_;       // packed base-p digits of alpha^i
  std::vector<int32_t> log_of_;         // packed rep -> log, -1 for unused slots
  std::vector<FieldElement> prime_elems_;          // c -> c * 1
  std::unordered_map<uint32_t, int> prime_value_;  // element code -> c
  FieldElement minus_one_;
};

}  // namespace tracediv
