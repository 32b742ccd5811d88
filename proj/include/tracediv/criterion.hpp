#pragma once

#include <optional>

#include "tracediv/padic.hpp"
#include "tracediv/trace_code.hpp"
#include "tracediv/valuation.hpp"

namespace tracediv {

struct CriterionOptions {
  std::optional<int> cap;  // default: floor(log_p n) + 1
  uint64_t tuple_limit = uint64_t{1} << 24;
  int workers = 1;
};

struct CriterionResult {
  Valuation valuation = Valuation::infinite();
  ExponentTuple argmin;
  // Objective breakdown at the argmin: valuation = digit_term + inner - e.
  Valuation digit_term = Valuation::finite(0);
  Valuation inner_valuation = Valuation::finite(0);
  int minus_e = 0;
  uint64_t tuples_examined = 0;
  uint64_t tuples_pruned = 0;
  bool degenerate = false;  // trace code is {0}; valuation reported Infinite
  int cap = 0;
};

// sum_j prod_i T(g_ij)^{r_i}, computed by collapsing each column's product of
// lifts to one lift of the field product (0^0 = 1; a zero entry with positive
// exponent kills its column).
WittElement inner_sum(const GeneratorMatrix& g, const ExponentTuple& r, const WittRing& ring);

// Exact p-adic valuation of the trace code of g: minimum over r in [0, Q-1]^k
// with |r| = 0 mod (q-1), |r| > 0 of
//   (1/(p-1)) sum_i S_p(r_i) + nu_p(inner_sum) - e.
// Tuples are scanned in nondecreasing digit-term order; inner valuations of
// AtLeast(cap) are treated as +infinity, which the cap policy makes sound.
// Deterministic (valuation, argmin) for any worker count; argmin ties break
// to the lexicographically smallest tuple.
CriterionResult criterion_valuation(const GeneratorMatrix& g, const CriterionOptions& opt = {});

// floor(log_p n) + 1: no codeword weight can exceed n.
int default_cap(int p, int n);

}  // namespace tracediv
