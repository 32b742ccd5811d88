#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tracediv/criterion.hpp"

using namespace tracediv;

namespace {

GeneratorMatrix simplex(const FieldTower& f8) {
  std::vector<FieldElement> row;
  for (int j = 0; j < 7; ++j) row.push_back(FieldElement::from_log(j));
  return GeneratorMatrix::make(f8, 1, 7, row);
}

GeneratorMatrix random_matrix(const FieldTower& t, std::mt19937_64& rng, int kmax, int nmax) {
  const int k = 1 + static_cast<int>(rng() % kmax);
  const int n = 1 + static_cast<int>(rng() % nmax);
  std::vector<FieldElement> entries(static_cast<size_t>(k) * n);
  for (auto& x : entries) {
    const uint64_t idx = rng() % t.order();
    x = idx == 0 ? FieldElement::zero() : FieldElement::from_log(idx - 1);
  }
  return GeneratorMatrix::make(t, k, n, entries);
}

}  // namespace

TEST_CASE("inner sums") {
  const FieldTower f8 = FieldTower::build(2, 1, 3);
  const GeneratorMatrix g = simplex(f8);
  const WittRing ring(f8, 5);

  // r = 0 gives the integer n
  CHECK(inner_sum(g, ExponentTuple::of({0}, 2), ring) == ring.from_integer(7));
  // r = 7: every column contributes T(1)
  CHECK(inner_sum(g, ExponentTuple::of({7}, 2), ring) == ring.from_integer(7));
  // r = 1: the sum over all 7th roots of unity vanishes
  CHECK(inner_sum(g, ExponentTuple::of({1}, 2), ring) == ring.zero());
  CHECK(ring.capped_valuation(inner_sum(g, ExponentTuple::of({1}, 2), ring), 4).is_at_least());
}

TEST_CASE("criterion on pinned codes") {
  const FieldTower f2 = FieldTower::build(2, 1, 1);
  const CriterionResult single =
      criterion_valuation(GeneratorMatrix::make(f2, 1, 1, {f2.one()}));
  CHECK(single.valuation == Valuation::finite(0));
  CHECK(single.argmin.entries == std::vector<uint32_t>{1});

  const CriterionResult rep =
      criterion_valuation(GeneratorMatrix::make(f2, 1, 2, {f2.one(), f2.one()}));
  CHECK(rep.valuation == Valuation::finite(1));

  const FieldTower f8 = FieldTower::build(2, 1, 3);
  const CriterionResult s = criterion_valuation(simplex(f8));
  CHECK(s.valuation == Valuation::finite(2));
  CHECK(s.argmin.entries == std::vector<uint32_t>{7});
  CHECK(s.digit_term == Valuation::finite(3));
  CHECK(s.inner_valuation == Valuation::finite(0));
  CHECK(s.minus_e == 1);
  // breakdown reassembles the valuation
  CHECK(s.digit_term + s.inner_valuation.plus_integer(-s.minus_e) == s.valuation);
}

TEST_CASE("degenerate code reports infinite") {
  const FieldTower f4 = FieldTower::build(2, 2, 1);
  const CriterionResult r =
      criterion_valuation(GeneratorMatrix::make(f4, 2, 2, {f4.zero(), f4.zero(), f4.zero(), f4.zero()}));
  CHECK(r.degenerate);
  CHECK(r.valuation.is_infinite());
}

TEST_CASE("criterion equals the oracle on random matrices") {
  std::mt19937_64 rng(2024);
  const FieldTower towers[] = {FieldTower::build(2, 1, 2), FieldTower::build(3, 1, 2),
                               FieldTower::build(2, 2, 1), FieldTower::build(5, 1, 1)};
  for (int trial = 0; trial < 80; ++trial) {
    const FieldTower& t = towers[rng() % 4];
    const GeneratorMatrix g = random_matrix(t, rng, 3, 12);
    const CriterionResult crit = criterion_valuation(g);
    const BruteforceResult oracle = bruteforce_valuation(g);
    CHECK(crit.valuation == oracle.valuation);
    CHECK(crit.degenerate == oracle.degenerate);
    if (!crit.degenerate) {
      // the argmin's digit term is a lower-bound certificate
      CHECK(crit.digit_term.plus_integer(-t.e()) <= crit.valuation);
    }
  }
}

TEST_CASE("column scaling leaves the minimum unchanged") {
  std::mt19937_64 rng(99);
  const FieldTower t = FieldTower::build(2, 2, 1);
  const GeneratorMatrix g = random_matrix(t, rng, 2, 8);
  const Valuation base = criterion_valuation(g).valuation;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FieldElement> scaled = g.entries;
    const int col = static_cast<int>(rng() % g.n);
    const FieldElement s = FieldElement::from_log(rng() % (t.order() - 1));
    for (int i = 0; i < g.k; ++i) scaled[i * g.n + col] = t.mul(s, scaled[i * g.n + col]);
    CHECK(criterion_valuation(GeneratorMatrix::make(t, g.k, g.n, scaled)).valuation == base);
  }
}

TEST_CASE("worker count does not change the result") {
  std::mt19937_64 rng(5);
  const FieldTower t = FieldTower::build(2, 1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const GeneratorMatrix g = random_matrix(t, rng, 3, 10);
    CriterionOptions one, many;
    one.workers = 1;
    many.workers = 8;
    const CriterionResult a = criterion_valuation(g, one);
    const CriterionResult b = criterion_valuation(g, many);
    CHECK(a.valuation == b.valuation);
    CHECK(a.argmin == b.argmin);
  }
}

TEST_CASE("tuple limit") {
  const FieldTower t = FieldTower::build(2, 1, 4);
  std::vector<FieldElement> entries(3, t.one());
  CriterionOptions opt;
  opt.tuple_limit = 4;
  CHECK_THROWS_AS((void)criterion_valuation(GeneratorMatrix::make(t, 3, 1, entries), opt), Error);
}

TEST_CASE("default cap") {
  CHECK(default_cap(2, 1) == 1);
  CHECK(default_cap(2, 7) == 3);
  CHECK(default_cap(2, 8) == 4);
  CHECK(default_cap(3, 20) == 3);
}
