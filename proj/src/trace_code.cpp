#include "tracediv/trace_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "tracediv/parallel.hpp"

namespace tracediv {
namespace {

int int_valuation(uint64_t n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Enumeration order of a single coordinate: ZERO, then ascending log.
FieldElement element_at(uint64_t idx) {
  return idx == 0 ? FieldElement::zero() : FieldElement::from_log(idx - 1);
}

uint64_t checked_space(const GeneratorMatrix& g, uint64_t limit) {
  uint64_t space = 1;
  for (int i = 0; i < g.k; ++i) {
    if (space > limit / g.tower->order())
      fail(ErrorCode::EnumerationLimitExceeded,
           "Q^k exceeds enumeration limit " + std::to_string(limit));
    space *= g.tower->order();
  }
  return space;
}

std::vector<FieldElement> alpha_at(uint64_t index, int k, uint64_t Q) {
  std::vector<FieldElement> alpha(k);
  for (int i = k - 1; i >= 0; --i) {
    alpha[i] = element_at(index % Q);
    index /= Q;
  }
  return alpha;
}

}  // namespace

GeneratorMatrix GeneratorMatrix::make(const FieldTower& tower, int k, int n,
                                      std::vector<FieldElement> entries) {
  if (k < 1 || n < 1) fail(ErrorCode::DimensionMismatch, "generator matrix needs k, n >= 1");
  if (entries.size() != static_cast<size_t>(k) * n)
    fail(ErrorCode::DimensionMismatch, "entry count does not match k*n");
  return GeneratorMatrix{&tower, k, n, std::move(entries)};
}

Codeword trace_codeword(const GeneratorMatrix& g, std::span<const FieldElement> alpha) {
  if (static_cast<int>(alpha.size()) != g.k)
    fail(ErrorCode::DimensionMismatch, "alpha length != k");
  const FieldTower& tower = *g.tower;
  Codeword c;
  c.coords.resize(g.n);
  for (int j = 0; j < g.n; ++j) {
    FieldElement s = FieldElement::zero();
    for (int i = 0; i < g.k; ++i) s = tower.add(s, tower.mul(alpha[i], g.at(i, j)));
    const FieldElement t = tower.trace_to_base(s);
    c.coords[j] = t;
    if (!t.is_zero()) ++c.weight;
  }
  return c;
}

BruteforceResult bruteforce_valuation(const GeneratorMatrix& g, uint64_t enumeration_limit,
                                      int workers) {
  const FieldTower& tower = *g.tower;
  const uint64_t Q = tower.order();
  const uint64_t space = checked_space(g, enumeration_limit);

  struct Local {
    bool any = false;
    Valuation val = Valuation::infinite();
    uint64_t witness_index = 0;
  };
  const int w = std::max(1, workers);
  std::vector<Local> locals(static_cast<size_t>(w) > space ? space : static_cast<size_t>(w));

  run_chunks(space, static_cast<int>(locals.size()), [&](size_t chunk, size_t begin, size_t end) {
    Local local;
    std::vector<FieldElement> alpha = alpha_at(begin, g.k, Q);
    std::vector<uint64_t> idx(g.k);
    uint64_t rem = begin;
    for (int i = g.k - 1; i >= 0; --i) {
      idx[i] = rem % Q;
      rem /= Q;
    }
    for (uint64_t pos = begin; pos < end; ++pos) {
      int weight = 0;
      for (int j = 0; j < g.n; ++j) {
        FieldElement s = FieldElement::zero();
        for (int i = 0; i < g.k; ++i) s = tower.add(s, tower.mul(alpha[i], g.at(i, j)));
        if (!tower.trace_to_base(s).is_zero()) ++weight;
      }
      if (weight > 0) {
        const Valuation v = Valuation::finite(int_valuation(static_cast<uint64_t>(weight), tower.p()));
        if (!local.any || v < local.val) {
          local.any = true;
          local.val = v;
          local.witness_index = pos;
        }
      }
      // advance odometer (last coordinate fastest)
      for (int i = g.k - 1; i >= 0; --i) {
        if (++idx[i] < Q) {
          alpha[i] = element_at(idx[i]);
          break;
        }
        idx[i] = 0;
        alpha[i] = element_at(0);
      }
    }
    locals[chunk] = local;
  });

  BruteforceResult out;
  out.enumerated = space;
  bool any = false;
  uint64_t witness_index = 0;
  Valuation best = Valuation::infinite();
  for (const Local& l : locals) {
    if (!l.any) continue;
    if (!any || l.val < best) {  // chunk order = lexicographic tie-break
      any = true;
      best = l.val;
      witness_index = l.witness_index;
    }
  }
  if (!any) {
    out.valuation = Valuation::infinite();
    out.degenerate = true;
    out.witness.assign(g.k, FieldElement::zero());
    return out;
  }
  out.valuation = best;
  out.witness = alpha_at(witness_index, g.k, Q);
  return out;
}

WeightDistribution weight_distribution(const GeneratorMatrix& g, uint64_t enumeration_limit) {
  const FieldTower& tower = *g.tower;
  const uint64_t Q = tower.order();
  const uint64_t space = checked_space(g, enumeration_limit);

  std::set<std::vector<uint32_t>> seen;
  std::map<int, uint64_t> counts;
  std::vector<FieldElement> alpha(g.k, FieldElement::zero());
  std::vector<uint64_t> idx(g.k, 0);
  for (uint64_t pos = 0; pos < space; ++pos) {
    const Codeword c = trace_codeword(g, alpha);
    std::vector<uint32_t> key(c.coords.size());
    for (size_t j = 0; j < c.coords.size(); ++j) key[j] = c.coords[j].code;
    if (seen.insert(std::move(key)).second) ++counts[c.weight];
    for (int i = g.k - 1; i >= 0; --i) {
      if (++idx[i] < Q) {
        alpha[i] = element_at(idx[i]);
        break;
      }
      idx[i] = 0;
      alpha[i] = element_at(0);
    }
  }
  WeightDistribution out;
  out.counts = std::move(counts);
  out.multiplicity = space / seen.size();
  return out;
}

int resolve_workers(int requested) {
  if (requested >= 1) return std::min(requested, 64);
  if (const char* env = std::getenv("TRACEDIV_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  return 1;
}

}  // namespace tracediv
