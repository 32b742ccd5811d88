#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tracediv/trace_code.hpp"

using namespace tracediv;

namespace {

GeneratorMatrix simplex(const FieldTower& f8) {
  std::vector<FieldElement> row;
  for (int j = 0; j < 7; ++j) row.push_back(FieldElement::from_log(j));
  return GeneratorMatrix::make(f8, 1, 7, row);
}

}  // namespace

TEST_CASE("trace codeword") {
  const FieldTower f2 = FieldTower::build(2, 1, 1);
  const GeneratorMatrix rep =
      GeneratorMatrix::make(f2, 1, 2, {f2.one(), f2.one()});
  const std::vector<FieldElement> zero{f2.zero()};
  CHECK(trace_codeword(rep, zero).weight == 0);
  const std::vector<FieldElement> one{f2.one()};
  const Codeword c = trace_codeword(rep, one);
  CHECK(c.weight == 2);
  CHECK(c.coords == std::vector<FieldElement>{f2.one(), f2.one()});

  const FieldTower f8 = FieldTower::build(2, 1, 3);
  const GeneratorMatrix g = simplex(f8);
  CHECK(trace_codeword(g, std::vector<FieldElement>{f8.one()}).weight == 4);

  const std::vector<FieldElement> two_long{f8.one(), f8.one()};
  CHECK_THROWS_AS((void)trace_codeword(g, two_long), Error);
}

TEST_CASE("bruteforce valuation") {
  const FieldTower f2 = FieldTower::build(2, 1, 1);
  const GeneratorMatrix single = GeneratorMatrix::make(f2, 1, 1, {f2.one()});
  CHECK(bruteforce_valuation(single).valuation == Valuation::finite(0));

  const GeneratorMatrix rep = GeneratorMatrix::make(f2, 1, 2, {f2.one(), f2.one()});
  CHECK(bruteforce_valuation(rep).valuation == Valuation::finite(1));

  const FieldTower f8 = FieldTower::build(2, 1, 3);
  const BruteforceResult r = bruteforce_valuation(simplex(f8));
  CHECK(r.valuation == Valuation::finite(2));
  CHECK_FALSE(r.degenerate);
  CHECK(r.witness == std::vector<FieldElement>{f8.one()});  // first nonzero alpha

  const GeneratorMatrix zero = GeneratorMatrix::make(f8, 1, 3, {f8.zero(), f8.zero(), f8.zero()});
  const BruteforceResult z = bruteforce_valuation(zero);
  CHECK(z.degenerate);
  CHECK(z.valuation.is_infinite());
}

TEST_CASE("weight distribution") {
  const FieldTower f8 = FieldTower::build(2, 1, 3);
  const WeightDistribution d = weight_distribution(simplex(f8));
  CHECK(d.counts == std::map<int, uint64_t>{{0, 1}, {4, 7}});
  CHECK(d.multiplicity == 1);

  const GeneratorMatrix zero = GeneratorMatrix::make(f8, 1, 2, {f8.zero(), f8.zero()});
  const WeightDistribution dz = weight_distribution(zero);
  CHECK(dz.counts == std::map<int, uint64_t>{{0, 1}});
  CHECK(dz.multiplicity == 8);

  const FieldTower f3 = FieldTower::build(3, 1, 1);
  const WeightDistribution d3 =
      weight_distribution(GeneratorMatrix::make(f3, 1, 1, {f3.one()}));
  CHECK(d3.counts == std::map<int, uint64_t>{{0, 1}, {1, 2}});
}

TEST_CASE("weight valuations respect the cap bound") {
  const FieldTower t = FieldTower::build(2, 2, 1);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 2);
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<FieldElement> entries(static_cast<size_t>(k) * n);
    for (auto& x : entries) {
      const uint64_t idx = rng() % t.order();
      x = idx == 0 ? FieldElement::zero() : FieldElement::from_log(idx - 1);
    }
    const GeneratorMatrix g = GeneratorMatrix::make(t, k, n, entries);
    const BruteforceResult r = bruteforce_valuation(g);
    if (!r.degenerate) {
      int cap = 0;
      while ((1 << (cap + 1)) <= n) ++cap;
      CHECK(r.valuation <= Valuation::finite(cap));
    }
  }
}

TEST_CASE("invariance under column permutation and row scaling") {
  const FieldTower t = FieldTower::build(2, 1, 3);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 2);
    const int n = 2 + static_cast<int>(rng() % 8);
    std::vector<FieldElement> entries(static_cast<size_t>(k) * n);
    for (auto& x : entries) {
      const uint64_t idx = rng() % t.order();
      x = idx == 0 ? FieldElement::zero() : FieldElement::from_log(idx - 1);
    }
    const GeneratorMatrix g = GeneratorMatrix::make(t, k, n, entries);
    const Valuation base = bruteforce_valuation(g).valuation;

    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<FieldElement> permuted(entries.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) permuted[i * n + perm[j]] = entries[i * n + j];
    CHECK(bruteforce_valuation(GeneratorMatrix::make(t, k, n, permuted)).valuation == base);

    std::vector<FieldElement> scaled = entries;
    const int row = static_cast<int>(rng() % k);
    const FieldElement s = FieldElement::from_log(rng() % (t.order() - 1));
    for (int j = 0; j < n; ++j) scaled[row * n + j] = t.mul(s, scaled[row * n + j]);
    CHECK(bruteforce_valuation(GeneratorMatrix::make(t, k, n, scaled)).valuation == base);
  }
}

TEST_CASE("m = 1 matches direct code enumeration") {
  const FieldTower t = FieldTower::build(3, 1, 1);  // q = 3, m = 1
  const GeneratorMatrix g = GeneratorMatrix::make(
      t, 2, 3,
      {t.one(), t.zero(), t.one(), t.zero(), t.one(), t.from_prime_value(2)});
  // direct enumeration of the code spanned by the rows
  int best = 100;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      int weight = 0;
      for (int j = 0; j < 3; ++j) {
        const FieldElement x = t.add(t.mul(t.from_prime_value(a), g.at(0, j)),
                                     t.mul(t.from_prime_value(b), g.at(1, j)));
        if (!x.is_zero()) ++weight;
      }
      if (weight > 0) {
        int v = 0;
        for (int w = weight; w % 3 == 0; w /= 3) ++v;
        best = std::min(best, v);
      }
    }
  }
  CHECK(bruteforce_valuation(g).valuation == Valuation::finite(best));
}

TEST_CASE("parallel enumeration is deterministic") {
  const FieldTower t = FieldTower::build(2, 2, 2);
  std::mt19937_64 rng(23);
  std::vector<FieldElement> entries(2 * 9);
  for (auto& x : entries) {
    const uint64_t idx = rng() % t.order();
    x = idx == 0 ? FieldElement::zero() : FieldElement::from_log(idx - 1);
  }
  const GeneratorMatrix g = GeneratorMatrix::make(t, 2, 9, entries);
  const BruteforceResult a = bruteforce_valuation(g, uint64_t{1} << 24, 1);
  const BruteforceResult b = bruteforce_valuation(g, uint64_t{1} << 24, 8);
  CHECK(a.valuation == b.valuation);
  CHECK(a.witness == b.witness);
}

TEST_CASE("enumeration limit") {
  const FieldTower t = FieldTower::build(2, 1, 4);
  const GeneratorMatrix g =
      GeneratorMatrix::make(t, 3, 1, {t.one(), t.one(), t.one()});
  CHECK_THROWS_AS((void)bruteforce_valuation(g, 1000), Error);
}

TEST_CASE("dimension checks") {
  const FieldTower t = FieldTower::build(2, 1, 1);
  CHECK_THROWS_AS((void)GeneratorMatrix::make(t, 0, 1, {}), Error);
  CHECK_THROWS_AS((void)GeneratorMatrix::make(t, 1, 2, {t.one()}), Error);
}
