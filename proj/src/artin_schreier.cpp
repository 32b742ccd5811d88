#include "tracediv/artin_schreier.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "tracediv/exponent_search.hpp"

namespace tracediv {
namespace {

int int_valuation(unsigned long long n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

uint64_t space_size(uint64_t Q, int k, uint64_t limit) {
  uint64_t space = 1;
  for (int i = 0; i < k; ++i) {
    if (space > limit / Q)
      fail(ErrorCode::EnumerationLimitExceeded, "Q^k exceeds enumeration limit");
    space *= Q;
  }
  return space;
}

}  // namespace

Polynomial Polynomial::make(const FieldTower& tower, int k,
                            std::vector<std::pair<std::vector<uint64_t>, FieldElement>> terms) {
  if (k < 1) fail(ErrorCode::DimensionMismatch, "polynomial needs k >= 1 variables");
  Polynomial f;
  f.tower_ = &tower;
  f.k_ = k;
  const uint64_t Q = tower.order();
  std::set<uint64_t> nominal, reduced_degs;
  for (auto& [exps, coeff] : terms) {
    if (static_cast<int>(exps.size()) != k)
      fail(ErrorCode::DimensionMismatch, "exponent tuple arity != k");
    if (coeff.is_zero()) continue;
    uint64_t nominal_deg = 0;
    std::vector<uint32_t> t(k);
    for (int i = 0; i < k; ++i) {
      nominal_deg += exps[i];
      // x^Q = x as functions on F_{q^m}
      const uint64_t r = exps[i] == 0 ? 0 : (exps[i] - 1) % (Q - 1) + 1;
      if (r != exps[i]) f.reduction_changed_ = true;
      t[i] = static_cast<uint32_t>(r);
    }
    nominal.insert(nominal_deg);
    auto [it, inserted] = f.terms_.emplace(std::move(t), coeff);
    if (!inserted) {
      it->second = tower.add(it->second, coeff);
      if (it->second.is_zero()) f.terms_.erase(it);
    }
  }
  for (const auto& [t, c] : f.terms_) {
    uint64_t d = 0;
    for (uint32_t x : t) d += x;
    reduced_degs.insert(d);
  }
  if (nominal != reduced_degs) f.reduction_changed_ = true;
  return f;
}

uint64_t Polynomial::degree() const {
  uint64_t d = 0;
  for (const auto& [t, c] : terms_) {
    uint64_t s = 0;
    for (uint32_t x : t) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::set<uint64_t> Polynomial::degree_set() const {
  std::set<uint64_t> out;
  for (const auto& [t, c] : terms_) {
    uint64_t s = 0;
    for (uint32_t x : t) s += x;
    out.insert(s);
  }
  return out;
}

bool Polynomial::homogeneous() const { return degree_set().size() == 1; }

FieldElement Polynomial::evaluate(std::span<const FieldElement> x) const {
  if (static_cast<int>(x.size()) != k_) fail(ErrorCode::DimensionMismatch, "point arity != k");
  FieldElement acc = FieldElement::zero();
  for (const auto& [t, c] : terms_) {
    FieldElement prod = c;
    for (int i = 0; i < k_; ++i) {
      if (t[i] == 0) continue;  // 0^0 = 1
      prod = tower_->mul(prod, tower_->pow(x[i], t[i]));
      if (prod.is_zero()) break;
    }
    acc = tower_->add(acc, prod);
  }
  return acc;
}

CountResult count_solutions(const Polynomial& f, uint64_t enumeration_limit) {
  const FieldTower& tower = f.tower();
  const uint64_t Q = tower.order();
  const uint64_t space = space_size(Q, f.k(), enumeration_limit);

  unsigned long long zeros = 0;
  std::vector<FieldElement> x(f.k(), FieldElement::zero());
  std::vector<uint64_t> idx(f.k(), 0);
  for (uint64_t pos = 0; pos < space; ++pos) {
    if (tower.trace_to_base(f.evaluate(x)).is_zero()) ++zeros;
    for (int i = f.k() - 1; i >= 0; --i) {
      if (++idx[i] < Q) {
        x[i] = idx[i] == 0 ? FieldElement::zero() : FieldElement::from_log(idx[i] - 1);
        break;
      }
      idx[i] = 0;
      x[i] = FieldElement::zero();
    }
  }

  CountResult out;
  out.trace_zeros = zeros;
  out.solutions = static_cast<unsigned long long>(tower.q()) * zeros;
  out.valuation =
      out.solutions == 0 ? Valuation::infinite() : Valuation::finite(int_valuation(out.solutions, tower.p()));
  return out;
}

DegreeSetInstance make_degree_set_instance(const FieldTower& tower, int k, std::set<uint64_t> D,
                                           size_t max_tuples) {
  if (k < 1) fail(ErrorCode::DimensionMismatch, "k must be positive");
  const uint64_t Q = tower.order();
  if (D.empty() || (D.size() == 1 && *D.begin() == 0))
    fail(ErrorCode::ConfigError, "degree set must differ from {0}");
  for (uint64_t d : D)
    if (d > static_cast<uint64_t>(k) * (Q - 1))
      fail(ErrorCode::ConfigError, "degree " + std::to_string(d) + " exceeds k(Q-1)");

  DegreeSetInstance inst;
  inst.tower = &tower;
  inst.k = k;
  inst.D = std::move(D);
  std::vector<uint32_t> t(k, 0);
  while (true) {
    uint64_t total = 0;
    for (uint32_t v : t) total += v;
    if (inst.D.count(total)) {
      inst.tuples.push_back(t);
      if (inst.tuples.size() > max_tuples)
        fail(ErrorCode::EnumerationLimitExceeded, "T_D larger than " + std::to_string(max_tuples));
    }
    int i = k - 1;
    for (; i >= 0; --i) {
      if (++t[i] < Q) break;
      t[i] = 0;
    }
    if (i < 0) break;
  }
  return inst;
}

DegreeSetProgramResult degree_set_program(const DegreeSetInstance& inst, uint64_t tuple_limit) {
  const FieldTower& tower = *inst.tower;
  const int p = tower.p();
  const uint64_t q = tower.q();
  const uint64_t Q = tower.order();
  const int L = static_cast<int>(inst.tuples.size());
  const int k = inst.k;
  if (L == 0) fail(ErrorCode::Infeasible, "empty tuple set T_D");

  const DigitSumIndex index(Q, p);
  // Suffix bounds: how much each coordinate sum can still grow from position j on.
  std::vector<std::vector<uint64_t>> suffix(L + 1, std::vector<uint64_t>(k, 0));
  for (int j = L - 1; j >= 0; --j) {
    for (int i = 0; i < k; ++i) suffix[j][i] = suffix[j + 1][i] + inst.tuples[j][i];
  }

  uint64_t examined = 0, pruned = 0;
  std::vector<uint32_t> r(L, 0);
  std::vector<uint64_t> usum(k, 0);
  bool found = false;
  std::vector<uint32_t> argmin;
  int arg_digit = 0;

  // DFS in lexicographic order over r with exact total digit sum S.
  auto dfs = [&](auto&& self, int pos, int budget) -> bool {
    if (pos == L) {
      ++examined;
      if (examined > tuple_limit) fail(ErrorCode::EnumerationLimitExceeded, "tuple limit exceeded");
      uint64_t total = 0;
      for (uint32_t v : r) total += v;
      if (total % (q - 1) != 0) return true;
      for (int i = 0; i < k; ++i)
        if (usum[i] == 0 || usum[i] % (Q - 1) != 0) return true;
      found = true;
      argmin = r;
      return false;
    }
    const int remaining = L - pos - 1;
    const uint64_t reach = index.max_value(budget);
    for (int i = 0; i < k; ++i) {
      // Positive multiples of Q-1 must remain reachable for every coordinate.
      if (usum[i] + reach * suffix[pos][i] < Q - 1) {
        ++pruned;
        return true;
      }
    }
    for (uint64_t v = 0; v < Q; ++v) {
      const int s = index.digit(v);
      if (s > budget) continue;
      if (budget - s > remaining * index.max_digit()) continue;
      if (pos == L - 1 && s != budget) continue;
      r[pos] = static_cast<uint32_t>(v);
      for (int i = 0; i < k; ++i) usum[i] += v * inst.tuples[pos][i];
      const bool keep = self(self, pos + 1, budget - s);
      for (int i = 0; i < k; ++i) usum[i] -= v * inst.tuples[pos][i];
      if (!keep) return false;
    }
    return true;
  };

  // Feasible at S <= k * S_p(Q-1): supports covering [k] with r = Q-1 exist
  // for any admissible degree set.
  const int s_bound = std::min(L, k) * index.max_digit();
  for (int S = 1; S <= s_bound && !found; ++S) {
    arg_digit = S;
    dfs(dfs, 0, S);
  }
  if (!found) fail(ErrorCode::Infeasible, "no feasible exponent assignment (internal)");

  DegreeSetProgramResult out;
  out.tuples = inst.tuples;
  out.result.valuation = Valuation::finite(arg_digit, p - 1);
  out.result.argmin = ExponentTuple::of(argmin, p);
  out.result.digit_term = out.result.valuation;
  out.result.inner_valuation = Valuation::finite(0);
  out.result.minus_e = 0;
  out.result.tuples_examined = examined;
  out.result.tuples_pruned = pruned;
  out.result.cap = 0;
  return out;
}

FeasibleAssignment cover_assignment(uint64_t d, int k, const FieldTower& tower) {
  const uint64_t Q = tower.order();
  if (d < 1 || d > static_cast<uint64_t>(k) * (Q - 1))
    fail(ErrorCode::ConfigError, "need 0 < d <= k(Q-1)");

  FeasibleAssignment out;
  out.r_value = static_cast<uint32_t>(Q - 1);
  const long long s = ceil_div(static_cast<long long>(k), static_cast<long long>(d));
  out.value = Valuation::finite(tower.em() * s);

  if (d >= static_cast<uint64_t>(k)) {
    // One tuple with entries in [1, Q-1] summing to d.
    std::vector<uint32_t> t(k, 1);
    uint64_t rest = d - k;
    for (int i = 0; i < k && rest > 0; ++i) {
      const uint64_t add = std::min<uint64_t>(rest, Q - 2);
      t[i] += static_cast<uint32_t>(add);
      rest -= add;
    }
    out.support.push_back(std::move(t));
  } else {
    // ceil(k/d) d-subsets covering [k]; the last block is right-aligned.
    for (long long j = 0; j < s; ++j) {
      std::vector<uint32_t> t(k, 0);
      const long long start = std::min<long long>(j * static_cast<long long>(d),
                                                  static_cast<long long>(k) - static_cast<long long>(d));
      for (uint64_t i = 0; i < d; ++i) t[start + i] = 1;
      out.support.push_back(std::move(t));
    }
  }

  // Feasibility re-checked with the program's own constraints.
  uint64_t total = 0;
  std::vector<uint64_t> usum(k, 0);
  for (const auto& t : out.support) {
    total += Q - 1;
    for (int i = 0; i < k; ++i) usum[i] += static_cast<uint64_t>(t[i]) * (Q - 1);
  }
  if (total % (tower.q() - 1) != 0) fail(ErrorCode::Infeasible, "assignment violates |r| congruence");
  for (int i = 0; i < k; ++i)
    if (usum[i] == 0 || usum[i] % (Q - 1) != 0)
      fail(ErrorCode::Infeasible, "assignment violates coordinate congruence");
  return out;
}

HomogeneousBound homogeneous_bound(uint64_t d, int k, const FieldTower& tower) {
  if (d < 1) fail(ErrorCode::DegreeZero, "homogeneous bound needs d >= 1");
  const uint64_t Q = tower.order();
  const uint64_t ratio = (Q - 1) / (tower.q() - 1);
  HomogeneousBound out;
  out.g = std::gcd(d, ratio);
  out.coprime = out.g == 1;
  const long long inner = ceil_div(static_cast<long long>(out.g) * k, static_cast<long long>(d));
  out.value = Valuation::finite(
      ceil_div(static_cast<long long>(tower.em()) * inner, static_cast<long long>(out.g)));
  return out;
}

Valuation general_degree_bound(uint64_t d, int k, const FieldTower& tower) {
  if (d < 1) fail(ErrorCode::DegreeZero, "bound needs d >= 1");
  const long long Qm1 = static_cast<long long>(tower.order() - 1);
  const long long qm1 = static_cast<long long>(tower.q() - 1);
  const long long inner = ceil_div(k * Qm1, static_cast<long long>(d) * qm1);
  return Valuation::finite(ceil_div(static_cast<long long>(tower.em()) * qm1 * inner, Qm1));
}

uint64_t digit_knapsack(uint64_t d, int k, const FieldTower& tower, DigitBase base) {
  const uint64_t b = base == DigitBase::BaseQ ? tower.q() : static_cast<uint64_t>(tower.p());
  const int places = base == DigitBase::BaseQ ? tower.m() : tower.em();
  uint64_t budget = std::min<uint64_t>(d, static_cast<uint64_t>(k) * (tower.order() - 1));
  // Cheapest digits first: saturate every coordinate place by place.
  uint64_t w = 0;
  uint64_t place_value = 1;
  for (int l = 0; l < places; ++l) {
    const uint64_t can = std::min<uint64_t>(static_cast<uint64_t>(k) * (b - 1), budget / place_value);
    w += can;
    budget -= can * place_value;
    place_value *= b;
  }
  return w;
}

KnapsackBounds knapsack_bounds(uint64_t d, int k, const FieldTower& tower) {
  if (d < 1) fail(ErrorCode::DegreeZero, "bounds need d >= 1");
  KnapsackBounds out;
  out.wq = digit_knapsack(d, k, tower, DigitBase::BaseQ);
  out.wp = digit_knapsack(d, k, tower, DigitBase::BaseP);
  out.via_base_q = Valuation::finite(
      tower.e() * ceil_div(static_cast<long long>(tower.m()) * k, static_cast<long long>(out.wq)));
  out.via_base_p = Valuation::finite(
      ceil_div(static_cast<long long>(tower.em()) * k, static_cast<long long>(out.wp)));
  return out;
}

ExtremalSearchResult search_extremal(uint64_t d, int k, const FieldTower& tower, uint64_t budget,
                                     uint64_t seed) {
  const uint64_t Q = tower.order();
  ExtremalSearchResult out;
  out.seed = seed;
  out.target = homogeneous_bound(d, k, tower).value;
  out.measured = Valuation::infinite();

  std::vector<std::vector<uint32_t>> tuples;
  {
    DegreeSetInstance inst = make_degree_set_instance(tower, k, {d});
    tuples = std::move(inst.tuples);
  }
  const std::vector<FieldElement> elems = tower.enumerate(FieldLevel::Extension);

  auto try_candidate = [&](const std::vector<std::pair<std::vector<uint64_t>, FieldElement>>& terms)
      -> bool {
    Polynomial f = Polynomial::make(tower, k, terms);
    const CountResult c = count_solutions(f);
    ++out.tried;
    if (c.valuation < out.measured) {
      out.measured = c.valuation;
    }
    if (c.valuation == out.target) {
      out.found = true;
      out.witness = std::move(f);
      out.solutions = c.solutions;
      out.measured = c.valuation;
      return true;
    }
    return false;
  };

  auto widen = [](const std::vector<uint32_t>& t) {
    return std::vector<uint64_t>(t.begin(), t.end());
  };

  // Single monomials, then small supports: the feasible assignments behind
  // the bound are monomial-supported.
  for (const auto& t : tuples) {
    for (uint64_t c = 1; c < Q && out.tried < budget; ++c) {
      if (try_candidate({{widen(t), FieldElement::from_log(c - 1)}})) return out;
    }
    if (out.tried >= budget) break;
  }
  for (size_t a = 0; a < tuples.size() && out.tried < budget; ++a) {
    for (size_t b = a + 1; b < tuples.size() && out.tried < budget; ++b) {
      for (uint64_t ca = 1; ca < Q && out.tried < budget; ++ca) {
        for (uint64_t cb = 1; cb < Q && out.tried < budget; ++cb) {
          if (try_candidate({{widen(tuples[a]), FieldElement::from_log(ca - 1)},
                             {widen(tuples[b]), FieldElement::from_log(cb - 1)}}))
            return out;
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  while (out.tried < budget) {
    const size_t support = 1 + rng() % std::min<size_t>(tuples.size(), 4);
    std::vector<std::pair<std::vector<uint64_t>, FieldElement>> terms;
    for (size_t i = 0; i < support; ++i) {
      const auto& t = tuples[rng() % tuples.size()];
      terms.emplace_back(widen(t), FieldElement::from_log(rng() % (Q - 1)));
    }
    if (try_candidate(terms)) return out;
  }
  return out;
}

BoundReport bound_report(const Polynomial& f, bool with_bounds, bool with_count,
                         uint64_t enumeration_limit) {
  const FieldTower& tower = f.tower();
  BoundReport out;
  out.k = f.k();
  out.d = f.degree();
  out.homogeneous = !f.is_zero() && f.homogeneous();
  out.reduction_changed = f.reduction_changed_degree();

  if (with_count) {
    const CountResult c = count_solutions(f, enumeration_limit);
    out.measured = c.valuation;
    out.solutions = c.solutions;
  }
  if (with_bounds) {
    if (out.d < 1) fail(ErrorCode::DegreeZero, "bounds require a polynomial of degree >= 1");
    if (out.homogeneous) out.homogeneous_lower = homogeneous_bound(out.d, out.k, tower).value;
    out.cover_upper = Valuation::finite(
        tower.em() * ceil_div(static_cast<long long>(out.k), static_cast<long long>(out.d)));
    out.degree_lower = general_degree_bound(out.d, out.k, tower);
    const KnapsackBounds b = knapsack_bounds(out.d, out.k, tower);
    out.knapsack_q_lower = b.via_base_q;
    out.knapsack_p_lower = b.via_base_p;
    out.wq = b.wq;
    out.wp = b.wp;
    const std::set<uint64_t> deg = f.degree_set();
    DegreeSetInstance inst;
    bool have_inst = true;
    try {
      inst = make_degree_set_instance(tower, f.k(), deg, 12);
    } catch (const Error&) {
      have_inst = false;  // T_D too large for the program at desk scale
    }
    if (have_inst) out.program_bound = degree_set_program(inst).result.valuation;

    if (out.measured) {
      const Valuation& m = *out.measured;
      if (m < out.degree_lower || m < out.knapsack_q_lower || m < out.knapsack_p_lower) out.sound = false;
      if (out.homogeneous_lower && m < *out.homogeneous_lower) out.sound = false;
      if (out.program_bound && m < *out.program_bound) out.sound = false;
    }
  }
  return out;
}

}  // namespace tracediv
