#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tracediv/error.hpp"

namespace tracediv {

// Digit-sum bookkeeping for values in [0, Q-1], Q = p^em. Backs the
// nondecreasing-digit-term enumeration used by the minimization programs.
class DigitSumIndex {
 public:
  DigitSumIndex(uint64_t Q, int p);

  uint64_t Q() const { return Q_; }
  int p() const { return p_; }
  int max_digit() const { return max_digit_; }  // S_p(Q-1)
  int digit(uint64_t v) const { return sp_[v]; }
  // Largest value in [0, Q-1] with digit sum <= s.
  uint64_t max_value(int s) const;

 private:
  uint64_t Q_;
  int p_;
  int max_digit_;
  std::vector<uint8_t> sp_;
  std::vector<uint64_t> max_value_;
};

// Visits every tuple in [0, Q-1]^len with total digit sum exactly S, in
// lexicographic order. Returns false if visit aborted the scan.
bool for_each_tuple_with_digit_sum(const DigitSumIndex& index, int len, int S,
                                   const std::function<bool(const std::vector<uint32_t>&)>& visit);

// Number of tuples in [0, Q-1]^len with component sum divisible by mod
// (including the zero tuple). Returns 0 when mod is too large to tabulate.
uint64_t count_congruent_tuples(uint64_t Q, int len, uint64_t mod);

}  // namespace tracediv
