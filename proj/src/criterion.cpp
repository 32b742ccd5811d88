#include "tracediv/criterion.hpp"

#include <algorithm>
#include <string>

#include "tracediv/exponent_search.hpp"
#include "tracediv/parallel.hpp"

namespace tracediv {
namespace {

struct ColumnData {
  uint64_t zero_mask = 0;                            // rows with g_ij = 0
  std::vector<std::pair<int, uint64_t>> entry_logs;  // (row, log g_ij) for nonzero entries
};

std::vector<ColumnData> column_data(const GeneratorMatrix& g) {
  std::vector<ColumnData> cols(g.n);
  for (int j = 0; j < g.n; ++j) {
    for (int i = 0; i < g.k; ++i) {
      const FieldElement x = g.at(i, j);
      if (x.is_zero())
        cols[j].zero_mask |= uint64_t{1} << i;
      else
        cols[j].entry_logs.emplace_back(i, x.log());
    }
  }
  return cols;
}

// Full Teichmuller table for small fields; on-demand lifts otherwise.
class LiftTable {
 public:
  explicit LiftTable(const WittRing& ring) : ring_(&ring) {
    const uint64_t Q = ring.tower().order();
    if (Q <= (uint64_t{1} << 16)) {
      table_.reserve(Q);
      table_.push_back(ring.teichmuller(FieldElement::zero()));
      for (uint64_t l = 0; l < Q - 1; ++l) table_.push_back(ring.teichmuller(FieldElement::from_log(l)));
    }
  }

  WittElement get(FieldElement a) const {
    if (!table_.empty()) return table_[a.code];
    return ring_->teichmuller(a);
  }

 private:
  const WittRing* ring_;
  std::vector<WittElement> table_;  // indexed by element code
};

WittElement inner_sum_impl(const std::vector<ColumnData>& cols, const WittRing& ring,
                           const LiftTable& lifts, const std::vector<uint32_t>& r) {
  const uint64_t L = ring.tower().order() - 1;
  uint64_t nonzero_mask = 0;
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] > 0) nonzero_mask |= uint64_t{1} << i;

  WittElement acc = ring.zero();
  for (const ColumnData& col : cols) {
    if (col.zero_mask & nonzero_mask) continue;  // 0^{positive} kills the column
    uint64_t log = 0;
    for (const auto& [i, lg] : col.entry_logs) log += static_cast<uint64_t>(r[i]) * lg % L;
    log %= L;
    acc = ring.add(acc, lifts.get(FieldElement::from_log(log)));
  }
  return acc;
}

bool lex_less(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Best {
  bool any = false;
  Valuation objective = Valuation::infinite();
  std::vector<uint32_t> r;
  Valuation inner = Valuation::finite(0);
  int digit = 0;

  void consider(const Valuation& obj, const std::vector<uint32_t>& tuple, const Valuation& inner_v,
                int digit_sum) {
    if (!any || obj < objective || (obj == objective && lex_less(tuple, r))) {
      any = true;
      objective = obj;
      r = tuple;
      inner = inner_v;
      digit = digit_sum;
    }
  }
};

}  // namespace

int default_cap(int p, int n) {
  int cap = 1;
  uint64_t pw = static_cast<uint64_t>(p);
  while (pw <= static_cast<uint64_t>(n)) {
    pw *= static_cast<uint64_t>(p);
    ++cap;
  }
  return cap;
}

WittElement inner_sum(const GeneratorMatrix& g, const ExponentTuple& r, const WittRing& ring) {
  if (static_cast<int>(r.entries.size()) != g.k)
    fail(ErrorCode::DimensionMismatch, "exponent tuple length != k");
  const LiftTable lifts(ring);
  return inner_sum_impl(column_data(g), ring, lifts, r.entries);
}

CriterionResult criterion_valuation(const GeneratorMatrix& g, const CriterionOptions& opt) {
  const FieldTower& tower = *g.tower;
  const int p = tower.p();
  const int e = tower.e();
  const uint64_t q = tower.q();
  const uint64_t Q = tower.order();
  if (g.k > 64) fail(ErrorCode::DimensionMismatch, "k > 64 unsupported");

  const int cap = opt.cap.value_or(default_cap(p, g.n));
  const WittRing ring(tower, cap + 1);
  const LiftTable lifts(ring);
  const std::vector<ColumnData> cols = column_data(g);
  const DigitSumIndex index(Q, p);
  const int workers = resolve_workers(opt.workers);

  // A tuple whose digit term alone exceeds cap + e cannot beat any weight
  // valuation (weights are at most n < p^cap).
  const int digit_bound = std::min((cap + e) * (p - 1), g.k * index.max_digit());

  Best best;
  uint64_t examined = 0;
  std::vector<std::vector<uint32_t>> block;
  constexpr size_t kBlock = 1 << 14;

  auto evaluate_block = [&](int group_digit) {
    std::vector<Best> locals(std::min<size_t>(block.size(), static_cast<size_t>(workers)));
    if (locals.empty()) return;
    run_chunks(block.size(), static_cast<int>(locals.size()),
               [&](size_t chunk, size_t begin, size_t end) {
                 Best local;
                 for (size_t idx = begin; idx < end; ++idx) {
                   const WittElement s = inner_sum_impl(cols, ring, lifts, block[idx]);
                   const Valuation inner = ring.capped_valuation(s, cap);
                   if (!inner.is_finite()) continue;  // treated as +infinity
                   const Valuation obj =
                       Valuation::finite(group_digit, p - 1) + inner.plus_integer(-e);
                   local.consider(obj, block[idx], inner, group_digit);
                 }
                 locals[chunk] = local;
               });
    for (const Best& l : locals) {
      if (l.any) best.consider(l.objective, l.r, l.inner, l.digit);
    }
    block.clear();
  };

  for (int S = 1; S <= digit_bound; ++S) {
    // Later groups can only produce objectives >= S/(p-1) - e.
    if (best.any && best.objective < Valuation::finite(S - e * (p - 1), p - 1)) break;
    for_each_tuple_with_digit_sum(index, g.k, S, [&](const std::vector<uint32_t>& r) {
      uint64_t total = 0;
      for (uint32_t v : r) total += v;
      if (total == 0 || total % (q - 1) != 0) return true;
      if (++examined > opt.tuple_limit)
        fail(ErrorCode::EnumerationLimitExceeded,
             "examined tuples exceed limit " + std::to_string(opt.tuple_limit));
      block.push_back(r);
      if (block.size() >= kBlock) evaluate_block(S);
      return true;
    });
    evaluate_block(S);
  }

  CriterionResult out;
  out.cap = cap;
  out.minus_e = e;
  out.tuples_examined = examined;
  const uint64_t feasible = count_congruent_tuples(Q, g.k, q - 1);
  out.tuples_pruned = feasible > examined + 1 ? feasible - 1 - examined : 0;  // excludes r = 0
  if (!best.any) {
    out.valuation = Valuation::infinite();
    out.degenerate = true;
    return out;
  }
  out.valuation = best.objective;
  out.argmin = ExponentTuple::of(best.r, p);
  out.digit_term = Valuation::finite(best.digit, p - 1);
  out.inner_valuation = best.inner;
  return out;
}

}  // namespace tracediv
