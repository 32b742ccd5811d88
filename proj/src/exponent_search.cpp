#include "tracediv/exponent_search.hpp"

#include "tracediv/padic.hpp"

namespace tracediv {

DigitSumIndex::DigitSumIndex(uint64_t Q, int p) : Q_(Q), p_(p) {
  if (Q < 2 || Q > (uint64_t{1} << 24))
    fail(ErrorCode::TableLimitExceeded, "digit-sum index range out of bounds");
  sp_.resize(Q);
  for (uint64_t v = 0; v < Q; ++v) sp_[v] = static_cast<uint8_t>(digit_sum(v, p));
  max_digit_ = digit_sum(Q - 1, p);
  max_value_.assign(max_digit_ + 1, 0);
  for (uint64_t v = 0; v < Q; ++v) {
    for (int s = sp_[v]; s <= max_digit_; ++s) max_value_[s] = std::max(max_value_[s], v);
  }
}

uint64_t DigitSumIndex::max_value(int s) const {
  if (s <= 0) return 0;
  return max_value_[std::min(s, max_digit_)];
}

namespace {

bool tuple_dfs(const DigitSumIndex& index, int len, int pos, int budget,
               std::vector<uint32_t>& tuple,
               const std::function<bool(const std::vector<uint32_t>&)>& visit) {
  const int remaining = len - pos - 1;
  if (pos == len - 1) {
    // Last coordinate must consume the budget exactly.
    for (uint64_t v = 0; v < index.Q(); ++v) {
      if (index.digit(v) != budget) continue;
      tuple[pos] = static_cast<uint32_t>(v);
      if (!visit(tuple)) return false;
    }
    return true;
  }
  for (uint64_t v = 0; v < index.Q(); ++v) {
    const int s = index.digit(v);
    if (s > budget) continue;
    if (budget - s > remaining * index.max_digit()) continue;
    tuple[pos] = static_cast<uint32_t>(v);
    if (!tuple_dfs(index, len, pos + 1, budget - s, tuple, visit)) return false;
  }
  return true;
}

}  // namespace

bool for_each_tuple_with_digit_sum(const DigitSumIndex& index, int len, int S,
                                   const std::function<bool(const std::vector<uint32_t>&)>& visit) {
  if (len <= 0 || S < 0 || S > len * index.max_digit()) return true;
  std::vector<uint32_t> tuple(len, 0);
  return tuple_dfs(index, len, 0, S, tuple, visit);
}

uint64_t count_congruent_tuples(uint64_t Q, int len, uint64_t mod) {
  uint64_t total = 1;
  for (int i = 0; i < len; ++i) {
    if (total > (uint64_t{1} << 62) / Q) return 0;  // counter unavailable
    total *= Q;
  }
  if (mod == 1) return total;
  if (mod > 4096) return 0;
  std::vector<uint64_t> base(mod, Q / mod);
  for (uint64_t r = 0; r < Q % mod; ++r) ++base[r];
  std::vector<uint64_t> dp(mod, 0);
  dp[0] = 1;
  for (int i = 0; i < len; ++i) {
    std::vector<uint64_t> next(mod, 0);
    for (uint64_t a = 0; a < mod; ++a) {
      if (dp[a] == 0) continue;
      for (uint64_t b = 0; b < mod; ++b) next[(a + b) % mod] += dp[a] * base[b];
    }
    dp = std::move(next);
  }
  return dp[0];
}

}  // namespace tracediv
