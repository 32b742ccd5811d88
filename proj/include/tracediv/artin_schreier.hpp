#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "tracediv/criterion.hpp"
#include "tracediv/field_tower.hpp"
#include "tracediv/valuation.hpp"

namespace tracediv {

// k-variate polynomial over F_{q^m}, stored exponent-reduced (x^Q = x as
// functions): per-variable exponents lie in [0, Q-1] and zero coefficients
// are dropped. Degrees below always refer to the reduced form.
class Polynomial {
 public:
  static Polynomial make(const FieldTower& tower, int k,
                         std::vector<std::pair<std::vector<uint64_t>, FieldElement>> terms);

  const FieldTower& tower() const { return *tower_; }
  int k() const { return k_; }
  const std::map<std::vector<uint32_t>, FieldElement>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  uint64_t degree() const;                 // max |t|; 0 for the zero polynomial
  std::set<uint64_t> degree_set() const;   // Deg(f): degrees of homogeneous parts
  bool homogeneous() const;                // exactly one homogeneous part
  bool reduction_changed_degree() const { return reduction_changed_; }

  FieldElement evaluate(std::span<const FieldElement> x) const;

 private:
  const FieldTower* tower_ = nullptr;
  int k_ = 0;
  std::map<std::vector<uint32_t>, FieldElement> terms_;
  bool reduction_changed_ = false;
};

struct CountResult {
  unsigned long long solutions = 0;  // N(f = y^q - y) over F_{q^m}^{k+1}
  Valuation valuation;               // nu_p(N); Infinite only for N = 0
  unsigned long long trace_zeros = 0;
};

// Counts via N(f = y^q - y) = q * #{x : Tr_{q^m/q}(f(x)) = 0}; only the
// x-space is enumerated.
CountResult count_solutions(const Polynomial& f, uint64_t enumeration_limit = uint64_t{1} << 24);

// T_D = {t in [0, Q-1]^k : |t| in D}, enumerated lexicographically.
struct DegreeSetInstance {
  const FieldTower* tower = nullptr;
  int k = 0;
  std::set<uint64_t> D;
  std::vector<std::vector<uint32_t>> tuples;
};

DegreeSetInstance make_degree_set_instance(const FieldTower& tower, int k, std::set<uint64_t> D,
                                           size_t max_tuples = 4096);

// Exact minimum of (1/(p-1)) sum_t S_p(r_t) over r in [0, Q-1]^{T_D} with
// |r| = 0 mod (q-1) and every coordinate sum sum_t r_t t_i a positive
// multiple of Q-1. This equals the least nu_p(N(f = y^q - y)) over f with
// Deg(f) within D. Best-first by digit term with reachability pruning.
struct DegreeSetProgramResult {
  std::vector<std::vector<uint32_t>> tuples;
  CriterionResult result;  // valuation = digit term; minus_e = 0
};

DegreeSetProgramResult degree_set_program(const DegreeSetInstance& inst,
                                  uint64_t tuple_limit = uint64_t{1} << 26);

// The explicit feasible assignment behind the em*ceil(k/d) upper bound:
// supports covering [k] by tuples of total degree d, each with r = Q-1.
struct FeasibleAssignment {
  std::vector<std::vector<uint32_t>> support;
  uint32_t r_value = 0;
  Valuation value;  // em * ceil(k/d)
};

FeasibleAssignment cover_assignment(uint64_t d, int k, const FieldTower& tower);

// ceil( (em/g) * ceil(g*k/d) ) with g = gcd(d, (Q-1)/(q-1)); tight (equal to
// em*ceil(k/d), attained by some homogeneous f) when g = 1.
struct HomogeneousBound {
  Valuation value;
  uint64_t g = 1;
  bool coprime = false;
};

HomogeneousBound homogeneous_bound(uint64_t d, int k, const FieldTower& tower);

// ceil( em(q-1)/(q^m-1) * ceil( k(q^m-1)/(d(q-1)) ) ), any f of degree d.
Valuation general_degree_bound(uint64_t d, int k, const FieldTower& tower);

enum class DigitBase { BaseQ, BaseP };

// W_b(d, F_{q^m}^k): max total base-b digit sum over tuples with |t| <= d.
uint64_t digit_knapsack(uint64_t d, int k, const FieldTower& tower, DigitBase base);

struct KnapsackBounds {
  Valuation via_base_q;  // e * ceil(mk / W_q)
  Valuation via_base_p;  // ceil(emk / W_p)
  uint64_t wq = 0, wp = 0;
};

KnapsackBounds knapsack_bounds(uint64_t d, int k, const FieldTower& tower);

struct ExtremalSearchResult {
  bool found = false;
  std::optional<Polynomial> witness;
  unsigned long long solutions = 0;
  Valuation measured;            // of the witness when found, else best seen
  Valuation target;
  uint64_t tried = 0;
  uint64_t seed = 0;
};

// Searches homogeneous degree-d polynomials for one attaining the
// homogeneous bound: single monomials first, then 2- and 3-term supports,
// then seeded random candidates. NotFound (found = false) is inconclusive.
ExtremalSearchResult search_extremal(uint64_t d, int k, const FieldTower& tower, uint64_t budget,
                                     uint64_t seed);

struct BoundReport {
  uint64_t d = 0;
  int k = 0;
  bool homogeneous = false;
  bool reduction_changed = false;
  std::optional<Valuation> program_bound;
  std::optional<Valuation> homogeneous_lower;
  Valuation cover_upper;
  Valuation degree_lower;
  Valuation knapsack_q_lower;
  Valuation knapsack_p_lower;
  uint64_t wq = 0, wp = 0;
  std::optional<Valuation> measured;
  std::optional<unsigned long long> solutions;
  bool sound = true;  // measured >= every applicable lower bound
};

BoundReport bound_report(const Polynomial& f, bool with_bounds, bool with_count,
                         uint64_t enumeration_limit = uint64_t{1} << 24);

}  // namespace tracediv
