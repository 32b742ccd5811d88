#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tracediv/artin_schreier.hpp"

using namespace tracediv;

namespace {

Polynomial monomial(const FieldTower& t, int k, std::vector<uint64_t> exps) {
  return Polynomial::make(t, k, {{std::move(exps), t.one()}});
}

// Test-only oracle: exhaustive maximum of the digit-sum knapsack.
uint64_t knapsack_exhaustive(uint64_t d, int k, const FieldTower& t, uint64_t base) {
  const uint64_t Q = t.order();
  std::vector<uint64_t> tuple(k, 0);
  uint64_t best = 0;
  while (true) {
    uint64_t total = 0, w = 0;
    for (uint64_t v : tuple) {
      total += v;
      w += digit_sum(v, static_cast<int>(base));
    }
    if (total <= d) best = std::max(best, w);
    int i = k - 1;
    for (; i >= 0; --i) {
      if (++tuple[i] < Q) break;
      tuple[i] = 0;
    }
    if (i < 0) break;
  }
  return best;
}

}  // namespace

TEST_CASE("polynomial reduction and degree bookkeeping") {
  const FieldTower t = FieldTower::build(2, 1, 2);  // Q = 4
  const Polynomial f = Polynomial::make(t, 1, {{{5}, t.one()}});  // x^5 = x^2 as a function
  CHECK(f.degree() == 2);
  CHECK(f.reduction_changed_degree());
  CHECK(f.degree_set() == std::set<uint64_t>{2});
  CHECK(f.homogeneous());

  const Polynomial g = Polynomial::make(t, 2, {{{1, 0}, t.one()}, {{1, 0}, t.one()}});
  CHECK(g.is_zero());  // coefficients cancel

  const Polynomial h =
      Polynomial::make(t, 2, {{{1, 1}, t.one()}, {{0, 0}, t.generator()}});
  CHECK(h.degree_set() == std::set<uint64_t>{0, 2});
  CHECK_FALSE(h.homogeneous());
}

TEST_CASE("evaluation") {
  const FieldTower t = FieldTower::build(2, 1, 2);
  const Polynomial f = Polynomial::make(
      t, 2, {{{1, 1}, t.one()}, {{0, 0}, t.one()}});  // x1 x2 + 1
  const std::vector<FieldElement> origin{t.zero(), t.zero()};
  CHECK(f.evaluate(origin) == t.one());  // 0^0 = 1 on the constant term
  const std::vector<FieldElement> ones{t.one(), t.one()};
  CHECK(f.evaluate(ones) == t.zero());
}

TEST_CASE("count solutions") {
  const FieldTower t = FieldTower::build(2, 1, 2);  // q = 2, m = 2
  {
    const CountResult c = count_solutions(monomial(t, 1, {1}));
    CHECK(c.solutions == 4);
    CHECK(c.valuation == Valuation::finite(2));
  }
  {
    const CountResult c = count_solutions(monomial(t, 1, {3}));
    CHECK(c.solutions == 8);
    CHECK(c.valuation == Valuation::finite(3));
  }
  {
    const Polynomial zero = Polynomial::make(t, 1, {});
    const CountResult c = count_solutions(zero);
    CHECK(c.solutions == 8);  // q * Q^k
  }
  {
    // Tr(x^2 + x + w) = 1 identically: no solutions at all
    const Polynomial f = Polynomial::make(
        t, 1, {{{2}, t.one()}, {{1}, t.one()}, {{0}, t.generator()}});
    const CountResult c = count_solutions(f);
    CHECK(c.solutions == 0);
    CHECK(c.valuation.is_infinite());
  }
}

TEST_CASE("degree-set program") {
  const FieldTower t = FieldTower::build(2, 1, 2);
  {
    // D = {1}, k = 1: T_D = {(1)}, r must be Q-1
    const DegreeSetInstance inst = make_degree_set_instance(t, 1, {1});
    const DegreeSetProgramResult r = degree_set_program(inst);
    CHECK(r.result.valuation == Valuation::finite(t.em()));
    CHECK(r.result.argmin.entries == std::vector<uint32_t>{3});
  }
  {
    // D = {3}, k = 1: minimum digit sum over r in {1,2,3} with 3r = 0 mod 3
    const DegreeSetInstance inst = make_degree_set_instance(t, 1, {3});
    const DegreeSetProgramResult r = degree_set_program(inst);
    CHECK(r.result.valuation == Valuation::finite(1));
    CHECK(r.result.argmin.entries == std::vector<uint32_t>{1});
  }
  CHECK_THROWS_AS((void)make_degree_set_instance(t, 1, {0}), Error);
  CHECK_THROWS_AS((void)make_degree_set_instance(t, 1, {17}), Error);
}

TEST_CASE("feasible assignments behind the upper bound") {
  const FieldTower t = FieldTower::build(2, 1, 2);
  {
    const FeasibleAssignment a = cover_assignment(2, 2, t);  // d = k
    CHECK(a.value == Valuation::finite(2));
    REQUIRE(a.support.size() == 1);
    CHECK(a.support[0] == std::vector<uint32_t>{1, 1});
  }
  {
    const FeasibleAssignment a = cover_assignment(1, 3, t);  // d = 1, k = 3
    CHECK(a.value == Valuation::finite(3 * t.em()));
    CHECK(a.support.size() == 3);
  }
  {
    const FeasibleAssignment a = cover_assignment(2, 3, t);
    CHECK(a.value == Valuation::finite(2 * t.em()));
    CHECK(a.support.size() == 2);
  }
}

TEST_CASE("closed-form bounds") {
  const FieldTower t = FieldTower::build(2, 1, 2);  // q=2, m=2, em=2
  {
    const HomogeneousBound b = homogeneous_bound(3, 1, t);
    CHECK(b.g == 3);
    CHECK_FALSE(b.coprime);
    CHECK(b.value == Valuation::finite(1));
  }
  {
    const HomogeneousBound b = homogeneous_bound(2, 2, t);
    CHECK(b.coprime);
    CHECK(b.value == Valuation::finite(2));  // em * ceil(k/d)
  }
  CHECK(general_degree_bound(3, 1, t) == Valuation::finite(1));
  // m = 1 reduces to e * ceil(k/d)
  const FieldTower f9 = FieldTower::build(3, 2, 1);
  for (int k = 1; k <= 3; ++k)
    for (uint64_t d = 1; d <= 4; ++d)
      CHECK(general_degree_bound(d, k, f9) == Valuation::finite(2 * ((k + d - 1) / d)));
  // huge degree: the inner ceiling is 1
  CHECK(general_degree_bound(16, 2, t) == Valuation::finite(1));
}

TEST_CASE("digit knapsack matches exhaustive search") {
  const FieldTower t = FieldTower::build(2, 1, 2);  // Q = 4
  CHECK(digit_knapsack(3, 2, t, DigitBase::BaseP) == 2);
  CHECK(digit_knapsack(0, 2, t, DigitBase::BaseP) == 0);
  CHECK(digit_knapsack(100, 2, t, DigitBase::BaseP) == 2 * digit_sum(3, 2));

  for (const auto& prm : {std::array<int, 3>{2, 1, 2}, {3, 1, 2}, {2, 2, 1}, {2, 1, 3}}) {
    const FieldTower tower = FieldTower::build(prm[0], prm[1], prm[2]);
    for (int k = 1; k <= 2; ++k) {
      for (uint64_t d = 0; d <= 2 * (tower.order() - 1); ++d) {
        CHECK(digit_knapsack(d, k, tower, DigitBase::BaseP) ==
              knapsack_exhaustive(d, k, tower, tower.p()));
        CHECK(digit_knapsack(d, k, tower, DigitBase::BaseQ) ==
              knapsack_exhaustive(d, k, tower, tower.q()));
      }
    }
  }
}

TEST_CASE("bounds 57 and 58") {
  const FieldTower t = FieldTower::build(2, 1, 2);
  {
    const KnapsackBounds b = knapsack_bounds(3, 1, t);
    CHECK(b.wq == 2);
    CHECK(b.wp == 2);
    CHECK(b.via_base_q == Valuation::finite(1));
    CHECK(b.via_base_p == Valuation::finite(1));
  }
  {
    const KnapsackBounds b = knapsack_bounds(1, 2, t);
    CHECK(b.via_base_q == Valuation::finite(t.e() * t.m() * 2));
    CHECK(b.via_base_p == Valuation::finite(t.em() * 2));
  }
  CHECK_THROWS_AS((void)knapsack_bounds(0, 1, t), Error);
}

TEST_CASE("extremal search") {
  {
    const FieldTower t = FieldTower::build(2, 1, 2);
    const ExtremalSearchResult r = search_extremal(1, 1, t, 1000, 1);
    CHECK(r.found);
    CHECK(r.measured == Valuation::finite(t.em()));
    const ExtremalSearchResult r2 = search_extremal(2, 2, t, 5000, 1);
    CHECK(r2.found);
    CHECK(r2.measured == Valuation::finite(2));
  }
}

TEST_CASE("bound report") {
  const FieldTower t = FieldTower::build(2, 1, 2);
  const Polynomial f = monomial(t, 1, {3});
  const BoundReport r = bound_report(f, true, true);
  CHECK(r.homogeneous);
  CHECK(r.homogeneous_lower.has_value());
  CHECK(*r.homogeneous_lower == Valuation::finite(1));
  CHECK(r.program_bound.has_value());
  CHECK(*r.measured == Valuation::finite(3));
  CHECK(r.sound);

  const Polynomial constant = Polynomial::make(t, 1, {{{0}, t.one()}});
  CHECK_THROWS_AS((void)bound_report(constant, true, false), Error);
  const BoundReport just_count = bound_report(constant, false, true);
  CHECK(just_count.measured.has_value());
}
