#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tracediv/padic.hpp"

using namespace tracediv;

TEST_CASE("digit sums") {
  CHECK(digit_sum(5, 2) == 2);
  CHECK(digit_sum(0, 7) == 0);
  // S_p(q^m - 1) = em(p-1)
  for (const auto& prm : {std::array<int, 3>{2, 1, 3}, {2, 2, 2}, {3, 1, 2}, {5, 1, 1}, {3, 2, 1}}) {
    const int p = prm[0], em = prm[1] * prm[2];
    uint64_t Q = 1;
    for (int i = 0; i < em; ++i) Q *= static_cast<uint64_t>(p);
    CHECK(digit_sum(Q - 1, p) == em * (p - 1));
  }
}

TEST_CASE("tau shift") {
  CHECK(tau_shift(1, 1, 2, 3) == 2);
  CHECK(tau_shift(7, 1, 2, 3) == 7);  // Q-1 is fixed
  CHECK(tau_shift(0, 5, 3, 2) == 0);

  // digit-sum identity: sum_h tau^h(x) = (Q-1)/(p-1) * S_p(x)
  for (const auto& prm : {std::pair<int, int>{2, 12}, {3, 7}}) {
    const int p = prm.first, em = prm.second;
    uint64_t Q = 1;
    for (int i = 0; i < em; ++i) Q *= static_cast<uint64_t>(p);
    for (uint64_t x = 0; x < Q; ++x) {
      uint64_t acc = 0;
      for (int h = 0; h < em; ++h) acc += tau_shift(x, h, p, em);
      CHECK(acc == (Q - 1) / (p - 1) * static_cast<uint64_t>(digit_sum(x, p)));
    }
  }
}

TEST_CASE("teichmuller lifts") {
  const FieldTower f3 = FieldTower::build(3, 1, 1);
  const WittRing r3(f3, 5);
  CHECK(r3.teichmuller(f3.zero()) == r3.zero());
  CHECK(r3.teichmuller(f3.one()) == r3.one());
  // T(2) = -1 = 3^5 - 1
  CHECK(r3.teichmuller(f3.from_prime_value(2)) == r3.from_integer(-1));
  CHECK(r3.teichmuller(f3.from_prime_value(2)).c[0] == 242);

  // F_4 with the lift of y^2 + y + 1: T(omega) = y exactly
  const FieldTower f4 = FieldTower::build(2, 2, 1);
  const WittRing r4(f4, 6);
  const WittElement t = r4.teichmuller(f4.generator());
  CHECK(t.c == std::vector<uint64_t>{0, 1});
  // and y^4 = y in the quotient
  CHECK(r4.pow(t, 4) == t);
}

TEST_CASE("teichmuller section and multiplicativity") {
  for (const auto& prm : {std::array<int, 3>{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {2, 1, 8}}) {
    const FieldTower t = FieldTower::build(prm[0], prm[1], prm[2]);
    const WittRing ring(t, 4);
    std::vector<WittElement> lift;
    lift.push_back(ring.teichmuller(t.zero()));
    for (uint64_t l = 0; l < t.order() - 1; ++l)
      lift.push_back(ring.teichmuller(FieldElement::from_log(l)));

    const auto elems = t.enumerate(FieldLevel::Extension);
    for (const FieldElement a : elems) CHECK(ring.reduce(lift[a.code]) == a);

    if (t.order() <= 16) {
      for (const FieldElement a : elems)
        for (const FieldElement b : elems)
          CHECK(ring.mul(lift[a.code], lift[b.code]) == lift[t.mul(a, b).code]);
    } else {
      std::mt19937_64 rng(5);
      for (int i = 0; i < 500; ++i) {
        const FieldElement a = elems[rng() % elems.size()];
        const FieldElement b = elems[rng() % elems.size()];
        CHECK(ring.mul(lift[a.code], lift[b.code]) == lift[t.mul(a, b).code]);
      }
    }
  }
}

TEST_CASE("witt ring arithmetic") {
  const FieldTower t = FieldTower::build(3, 1, 2);
  const WittRing ring(t, 4);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    WittElement a = ring.zero();
    for (auto& c : a.c) c = rng() % ring.modulus();
    CHECK(ring.add(a, ring.neg(a)) == ring.zero());
    const WittElement pa = ring.int_scale(a, 3);
    for (uint64_t c : pa.c) CHECK(c % 3 == 0);
  }
  const WittRing other(t, 5);
  CHECK_THROWS_AS((void)ring.add(ring.one(), other.one()), Error);
}

TEST_CASE("capped valuation") {
  const FieldTower f2 = FieldTower::build(2, 1, 1);
  const WittRing ring(f2, 5);
  CHECK(ring.capped_valuation(ring.from_integer(7), 5) == Valuation::finite(0));
  CHECK(ring.capped_valuation(ring.zero(), 5) == Valuation::at_least(5));
  CHECK(ring.capped_valuation(ring.from_integer(4), 5) == Valuation::finite(2));

  // sum of all 7th roots of unity to the 7th power is the integer 7
  const FieldTower f8 = FieldTower::build(2, 1, 3);
  const WittRing r8(f8, 5);
  WittElement acc = r8.zero();
  for (int j = 0; j < 7; ++j)
    acc = r8.add(acc, r8.pow(r8.teichmuller(FieldElement::from_log(j)), 7));
  CHECK(acc == r8.from_integer(7));
  CHECK(r8.capped_valuation(acc, 5) == Valuation::finite(0));
}

TEST_CASE("vector valuation") {
  const FieldTower f2 = FieldTower::build(2, 1, 1);
  const WittRing ring(f2, 5);
  const std::vector<WittElement> a{ring.from_integer(7), ring.from_integer(2)};
  CHECK(ring.vector_valuation(a, 5) == Valuation::finite(0));
  const std::vector<WittElement> b{ring.zero(), ring.zero()};
  CHECK(ring.vector_valuation(b, 5) == Valuation::at_least(5));
  const std::vector<WittElement> c{ring.from_integer(2), ring.from_integer(4)};
  CHECK(ring.vector_valuation(c, 5) == Valuation::finite(1));
}

TEST_CASE("valuation ordering and arithmetic") {
  CHECK(Valuation::finite(1, 2) < Valuation::finite(1));
  CHECK(Valuation::finite(3) < Valuation::at_least(4));
  CHECK(Valuation::finite(4) < Valuation::at_least(4));  // AtLeast sits above its cap
  CHECK(Valuation::at_least(4) < Valuation::infinite());
  CHECK(Valuation::finite(1, 2) + Valuation::finite(1, 2) == Valuation::finite(1));
  CHECK((Valuation::finite(1) + Valuation::at_least(3)).is_at_least());
  CHECK(Valuation::finite(5, 2).plus_integer(-1) == Valuation::finite(3, 2));
  CHECK(Valuation::min(Valuation::finite(2), Valuation::at_least(5)) == Valuation::finite(2));
  CHECK(Valuation::finite(2, 4) == Valuation::finite(1, 2));
  CHECK(Valuation::finite(3).integer() == 3);
}

TEST_CASE("exponent tuple caches") {
  const ExponentTuple t = ExponentTuple::of({3, 0, 5}, 2);
  CHECK(t.total == 8);
  CHECK(t.digit_total == 4);
}
