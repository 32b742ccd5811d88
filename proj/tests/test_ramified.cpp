#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tracediv/ramified.hpp"

using namespace tracediv;

namespace {

struct Rings {
  FieldTower tower;
  WittRing witt;
  RamifiedRing ring;

  explicit Rings(int p, int e)
      : tower(FieldTower::build(p, e, 1)), witt(tower, e + 3), ring(witt) {}
};

}  // namespace

TEST_CASE("cyclotomic relations") {
  for (int p : {2, 3, 5}) {
    Rings r(p, 1);
    CHECK(r.ring.pow(r.ring.xi_p(), static_cast<uint64_t>(p)) == r.ring.one());
    // pi^{p-1} has nu_p = 1
    const RamifiedElement pw = r.ring.pow(r.ring.pi(), static_cast<uint64_t>(p - 1));
    const int cap = (p - 1) * (r.witt.precision() - 1);
    CHECK(r.ring.pi_valuation(pw, cap) == Valuation::finite(1));
    CHECK(r.ring.pi_valuation(r.ring.pi(), cap) == Valuation::finite(1, p - 1));
    CHECK(r.ring.pi_valuation(r.ring.from_integer(p), cap) == Valuation::finite(1));
  }
}

TEST_CASE("p = 2 degenerates to pi = -2") {
  Rings r(2, 1);
  CHECK(r.ring.pi() == r.ring.from_integer(-2));
  CHECK(r.ring.xi_p() == r.ring.from_integer(-1));
}

TEST_CASE("xi_3 - xi_3^2 has pi-valuation 1") {
  Rings r(3, 1);
  const RamifiedElement xi = r.ring.xi_p();
  const RamifiedElement z = r.ring.sub(xi, r.ring.mul(xi, xi));
  CHECK(r.ring.pi_valuation(z, 2 * (r.witt.precision() - 1)) == Valuation::finite(1, 2));
}

TEST_CASE("unit division") {
  Rings r(3, 2);  // q = 9
  const long long q = 9;
  const RamifiedElement lhs = r.ring.unit_div(r.ring.from_integer(q), r.ring.from_integer(q - 1));
  CHECK(r.ring.mul(lhs, r.ring.from_integer(q - 1)) == r.ring.from_integer(q));
  CHECK_THROWS_AS((void)r.ring.unit_div(r.ring.one(), r.ring.pi()), Error);
  CHECK_THROWS_AS((void)r.ring.unit_div(r.ring.one(), r.ring.from_integer(3)), Error);
}

TEST_CASE("gauss sum base cases") {
  Rings r2(2, 1);
  const RamifiedElement g0 = gauss_sum(r2.ring, 0);
  CHECK(g0 == r2.ring.from_integer(-1));  // single term xi_2 = -1
  CHECK(r2.ring.pi_valuation(g0, r2.witt.precision() - 1) == Valuation::finite(0));

  Rings r3(3, 1);
  const RamifiedElement g1 = gauss_sum(r3.ring, 1);
  const RamifiedElement xi = r3.ring.xi_p();
  CHECK(g1 == r3.ring.sub(xi, r3.ring.mul(xi, xi)));  // xi_3 - xi_3^2
  CHECK(r3.ring.pi_valuation(g1, 2 * (r3.witt.precision() - 1)) == Valuation::finite(1, 2));
}

TEST_CASE("stickelberger at small q") {
  for (int q : {2, 3, 4, 5, 8}) {
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    for (int w = q; w > 1; w /= p) ++e;
    Rings r(p, e);
    const int cap = (p - 1) * (r.witt.precision() - 1);
    for (int i = 0; i <= q - 2; ++i) {
      const Valuation v = r.ring.pi_valuation(gauss_sum(r.ring, i), cap);
      CHECK(v == Valuation::finite(digit_sum(i, p), p - 1));
    }
  }
}

TEST_CASE("gauss sum norm identity at q = 8") {
  Rings r(2, 3);
  const int cap = r.witt.precision() - 1;
  for (int i = 1; i <= 6; ++i) {
    const Valuation a = r.ring.pi_valuation(gauss_sum(r.ring, i), cap);
    const Valuation b = r.ring.pi_valuation(gauss_sum(r.ring, 7 - i), cap);
    CHECK(a + b == Valuation::finite(3));  // e = 3
  }
}

TEST_CASE("lambda table invariants") {
  for (int prm : {0, 1, 2}) {
    const int ps[] = {2, 3, 2}, es[] = {2, 1, 3};  // q = 4, 3, 8
    Rings r(ps[prm], es[prm]);
    const int p = ps[prm], e = es[prm];
    const long long q = static_cast<long long>(r.tower.q());
    const GaussSumTable table = lambda_table(r.ring);
    REQUIRE(table.lambda.size() == static_cast<size_t>(q));
    CHECK(table.lambda[0] == r.ring.one());
    // lambda_{q-1} * (q-1) = -q, and nu_p(lambda_{q-1}) = e
    CHECK(r.ring.mul(table.lambda[q - 1], r.ring.from_integer(q - 1)) ==
          r.ring.from_integer(-q));
    const int cap = (p - 1) * (r.witt.precision() - 1);
    CHECK(r.ring.pi_valuation(table.lambda[q - 1], cap) == Valuation::finite(e));
    if (q > 2) CHECK(r.ring.pi_valuation(table.lambda[1], cap) == Valuation::finite(1, p - 1));
  }
}

TEST_CASE("fourier expansion verification") {
  for (int q : {2, 3, 4, 5}) {
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    for (int w = q; w > 1; w /= p) ++e;
    const FieldTower tower = FieldTower::build(p, e, 1);
    const FourierCheckReport report = verify_fourier_expansion(tower, default_gauss_precision(tower));
    CHECK(report.pass);
    CHECK(report.checked == static_cast<uint64_t>(q));
  }
}
