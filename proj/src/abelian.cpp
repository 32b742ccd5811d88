#include "tracediv/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "tracediv/exponent_search.hpp"

namespace tracediv {
namespace {

void validate_spec(const AbelianCodeSpec& spec) {
  if (spec.group.empty()) fail(ErrorCode::ConfigError, "group must have at least one factor");
  for (uint64_t n : spec.group)
    if (n < 1) fail(ErrorCode::ConfigError, "group orders must be positive");
  for (const auto& s : spec.nonzeros)
    if (s.size() != spec.group.size())
      fail(ErrorCode::ConfigError, "nonzero tuple arity does not match the group");
}

uint64_t group_exponent(const AbelianCodeSpec& spec) {
  uint64_t N = 1;
  for (uint64_t n : spec.group) N = std::lcm(N, n);
  return N;
}

}  // namespace

std::vector<std::vector<uint64_t>> expand_cosets(const AbelianCodeSpec& spec) {
  validate_spec(spec);
  uint64_t q = 1;
  for (int i = 0; i < spec.e; ++i) q *= static_cast<uint64_t>(spec.p);
  for (uint64_t n : spec.group)
    if (std::gcd(n, static_cast<uint64_t>(spec.p)) != 1)
      fail(ErrorCode::NonCoprimeGroupOrder, "group order " + std::to_string(n) + " not coprime to q");
  std::set<std::vector<uint64_t>> seen;
  std::vector<std::vector<uint64_t>> out;
  for (const auto& s : spec.nonzeros) {
    std::vector<uint64_t> cur(s.size());
    for (size_t l = 0; l < s.size(); ++l) cur[l] = s[l] % spec.group[l];
    const std::vector<uint64_t> start = cur;
    do {
      if (seen.insert(cur).second) out.push_back(cur);
      for (size_t l = 0; l < cur.size(); ++l) cur[l] = cur[l] * (q % spec.group[l]) % spec.group[l];
    } while (cur != start);
  }
  return out;
}

AbelianContext build_abelian_context(const AbelianCodeSpec& spec, bool expand,
                                     uint64_t table_limit) {
  validate_spec(spec);
  const uint64_t N = group_exponent(spec);
  uint64_t q = 1;
  for (int i = 0; i < spec.e; ++i) q *= static_cast<uint64_t>(spec.p);
  if (std::gcd(N, static_cast<uint64_t>(spec.p)) != 1)
    fail(ErrorCode::NonCoprimeGroupOrder, "group exponent " + std::to_string(N) +
                                              " shares a factor with q = " + std::to_string(q));
  int m = 1;
  uint64_t t = q % N;
  while (t != 1 % N) {
    t = t * (q % N) % N;
    ++m;
  }

  AbelianCodeSpec canonical = spec;
  if (expand) {
    canonical.nonzeros = expand_cosets(spec);
  } else {
    for (auto& s : canonical.nonzeros)
      for (size_t l = 0; l < s.size(); ++l) s[l] %= spec.group[l];
  }
  FieldTower tower = FieldTower::build(spec.p, spec.e, m, std::nullopt, table_limit);
  const uint64_t L = tower.order() - 1;
  std::vector<FieldElement> gammas;
  for (uint64_t n : spec.group)
    gammas.push_back(tower.pow(tower.generator(), static_cast<long long>(L / n)));
  return AbelianContext{std::move(canonical), N, m, std::move(tower), std::move(gammas), expand};
}

GeneratorMatrix build_trace_representation(const AbelianContext& ctx) {
  const auto& spec = ctx.spec;
  const int h = static_cast<int>(spec.group.size());
  uint64_t cols = 1;
  for (uint64_t n : spec.group) {
    if (cols > (uint64_t{1} << 24) / n)
      fail(ErrorCode::EnumerationLimitExceeded, "|A| too large");
    cols *= n;
  }
  const int k = static_cast<int>(spec.nonzeros.size());
  if (k < 1) fail(ErrorCode::Infeasible, "no nonzero tuples: the code is {0}");

  std::vector<FieldElement> entries;
  entries.reserve(static_cast<size_t>(k) * cols);
  std::vector<uint64_t> j(h, 0);
  for (int i = 0; i < k; ++i) {
    std::fill(j.begin(), j.end(), 0);
    for (uint64_t c = 0; c < cols; ++c) {
      FieldElement v = ctx.tower.one();
      for (int l = 0; l < h; ++l) {
        v = ctx.tower.mul(
            v, ctx.tower.pow(ctx.gammas[l],
                             static_cast<long long>(spec.nonzeros[i][l] * j[l] % spec.group[l])));
      }
      entries.push_back(v);
      for (int l = h - 1; l >= 0; --l) {  // last coordinate fastest
        if (++j[l] < spec.group[l]) break;
        j[l] = 0;
      }
    }
  }
  return GeneratorMatrix::make(ctx.tower, k, static_cast<int>(cols), std::move(entries));
}

CriterionResult delsarte_mceliece_valuation(const AbelianContext& ctx, uint64_t tuple_limit) {
  const auto& spec = ctx.spec;
  const int p = spec.p;
  const int e = spec.e;
  const uint64_t q = ctx.tower.q();
  const uint64_t Q = ctx.tower.order();
  const int k = static_cast<int>(spec.nonzeros.size());
  const int h = static_cast<int>(spec.group.size());

  CriterionResult out;
  out.minus_e = e;
  out.cap = 0;
  if (k == 0) {
    out.degenerate = true;
    out.valuation = Valuation::infinite();
    return out;
  }

  const DigitSumIndex index(Q, p);
  uint64_t examined = 0;
  bool found = false;
  std::vector<uint32_t> argmin;
  int arg_digit = 0;

  // The objective is digit/(p-1) - e, constant on each digit-sum group, so
  // the first feasible tuple in lexicographic group order is the minimum.
  // r = (Q-1, 0, ..., 0) is always feasible, so S <= S_p(Q-1) suffices.
  for (int S = 1; S <= index.max_digit() && !found; ++S) {
    for_each_tuple_with_digit_sum(index, k, S, [&](const std::vector<uint32_t>& r) {
      if (++examined > tuple_limit)
        fail(ErrorCode::EnumerationLimitExceeded, "tuple limit exceeded");
      uint64_t total = 0;
      for (uint32_t v : r) total += v;
      if (total == 0 || total % (q - 1) != 0) return true;
      for (int l = 0; l < h; ++l) {
        uint64_t acc = 0;
        for (int i = 0; i < k; ++i)
          acc = (acc + static_cast<uint64_t>(r[i]) % spec.group[l] * (spec.nonzeros[i][l] % spec.group[l])) %
                spec.group[l];
        if (acc != 0) return true;
      }
      found = true;
      argmin = r;
      arg_digit = S;
      return false;  // lexicographically first feasible tuple in the group
    });
  }

  out.tuples_examined = examined;
  if (!found) {
    out.degenerate = true;
    out.valuation = Valuation::infinite();
    return out;
  }
  out.argmin = ExponentTuple::of(argmin, p);
  out.digit_term = Valuation::finite(arg_digit, p - 1);
  out.inner_valuation = Valuation::finite(0);  // the inner sum is |A|, prime to p
  out.valuation = out.digit_term.plus_integer(-e);
  return out;
}

McElieceResult mceliece_ell(const AbelianCodeSpec& spec) {
  validate_spec(spec);
  if (spec.e != 1) fail(ErrorCode::ConfigError, "mceliece_ell requires a prime base field (e = 1)");
  if (spec.group.size() != 1) fail(ErrorCode::ConfigError, "mceliece_ell requires a cyclic group");
  const uint64_t n = spec.group[0];
  AbelianCodeSpec tmp = spec;
  const std::vector<std::vector<uint64_t>> orbit = expand_cosets(tmp);
  if (orbit.empty()) fail(ErrorCode::Infeasible, "empty coset union");
  std::vector<uint64_t> gens;
  gens.reserve(orbit.size());
  for (const auto& s : orbit) gens.push_back(s[0]);
  std::sort(gens.begin(), gens.end());

  // BFS over residues: dist[x] = fewest exponents summing to x mod n.
  std::vector<int64_t> dist(n, -1);
  std::vector<std::pair<uint64_t, uint64_t>> prev(n);  // (previous residue, generator used)
  std::queue<uint64_t> queue;
  for (uint64_t g : gens) {
    const uint64_t x = g % n;
    if (dist[x] == -1) {
      dist[x] = 1;
      prev[x] = {x, g};  // depth-1 marker
      queue.push(x);
    }
  }
  while (!queue.empty() && dist[0] == -1) {
    const uint64_t x = queue.front();
    queue.pop();
    for (uint64_t g : gens) {
      const uint64_t y = (x + g) % n;
      if (dist[y] == -1) {
        dist[y] = dist[x] + 1;
        prev[y] = {x, g};
        queue.push(y);
      }
    }
  }
  if (dist[0] == -1) fail(ErrorCode::Infeasible, "no multiset of nonzeros multiplies to 1");

  McElieceResult out;
  out.ell = static_cast<uint64_t>(dist[0]);
  out.exponent = (out.ell + spec.p - 2) / (spec.p - 1) - 1;
  uint64_t x = 0;
  for (int64_t d = dist[0]; d > 0; --d) {
    out.witness.push_back(prev[x].second);
    x = d > 1 ? prev[x].first : 0;
  }
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

}  // namespace tracediv
