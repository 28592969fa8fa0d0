#include "doctest.h"

#include "v5/chow.hpp"
#include "v5/error.hpp"

#include <array>
#include <random>
#include <vector>

using namespace v5;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random class a*xi + b*A in the given bundle context.
ChowClass rand_degree_one(std::mt19937_64& rng, long c1, long c2) {
  ChowClass c(c1, c2);
  c.add_term(1, 0, rand_rational(rng));
  c.add_term(0, 1, rand_rational(rng));
  return c;
}

/// Closed form for the integral of (a1*xi+b1*A)(a2*xi+b2*A)(a3*xi+b3*A):
/// expand symbolically, then apply xi^3 = c1^2-c2, xi^2 A = c1, xi A^2 = 1
/// and A^3 = 0.  Serves as an independent oracle for the reduction engine.
Rational triple_oracle(long c1, long c2, const std::array<Rational, 3>& a,
                       const std::array<Rational, 3>& b) {
  const Rational xi3(c1 * c1 - c2);
  const Rational xi2a(c1);
  const Rational s_aaa = a[0] * a[1] * a[2];
  const Rational s_aab = a[0] * a[1] * b[2] + a[0] * b[1] * a[2] + b[0] * a[1] * a[2];
  const Rational s_abb = a[0] * b[1] * b[2] + b[0] * a[1] * b[2] + b[0] * b[1] * a[2];
  return Rational(s_aaa * xi3 + s_aab * xi2a + s_abb);
}

}  // namespace

TEST_CASE("chow classes stay in normal form") {
  ChowClass c(2, 3);

  SUBCASE("xi^2 rewrites to c1*xi*A - c2*A^2") {
    c.add_term(2, 0, 1);
    CHECK(c.coeff(2, 0) == 0);
    CHECK(c.coeff(1, 1) == 2);
    CHECK(c.coeff(0, 2) == -3);
    CHECK(c.is_homogeneous_of(2));
  }

  SUBCASE("A^3 vanishes") {
    c.add_term(0, 3, 5);
    CHECK(c.is_zero());
    CHECK(c.degree() == -1);
  }

  SUBCASE("xi^3 collapses to a multiple of the top monomial") {
    c.add_term(3, 0, 1);
    CHECK(c.coeff(1, 2) == 1);  // c1^2 - c2 = 4 - 3
    CHECK(c.coeff(1, 1) == 0);
    CHECK(c.coeff(0, 2) == 0);
    CHECK(c.is_homogeneous_of(3));
    CHECK(c.integral() == 1);
  }

  SUBCASE("cancelling terms erase their slot") {
    c.add_term(1, 1, Rational(7, 2));
    c.add_term(1, 1, Rational(-7, 2));
    CHECK(c.is_zero());
    CHECK(c.coeff(1, 1) == 0);
  }

  SUBCASE("the zero class is homogeneous of every degree") {
    CHECK(c.is_zero());
    CHECK(c.degree() == -1);
    for (int d = 0; d <= 3; ++d) CHECK(c.is_homogeneous_of(d));
    CHECK(c.integral() == 0);
    CHECK(c.str() == "0");
  }

  SUBCASE("generator factories") {
    const ChowClass xi = ChowClass::xi(2, 3);
    const ChowClass a = ChowClass::hyperplane(2, 3);
    CHECK(xi.coeff(1, 0) == 1);
    CHECK(xi.degree() == 1);
    CHECK(a.coeff(0, 1) == 1);
    CHECK(a.degree() == 1);
    CHECK(xi != a);
    CHECK(xi.str() == "1*xi");
    CHECK(a.str() == "1*A");
  }
}

TEST_CASE("reduction is confluent regardless of evaluation order") {
  const long c1 = -1, c2 = 3;
  const ChowClass xi = ChowClass::xi(c1, c2);
  const ChowClass a = ChowClass::hyperplane(c1, c2);

  SUBCASE("xi*xi*A under every association") {
    const ChowClass left = (xi * xi) * a;
    const ChowClass right = xi * (xi * a);
    CHECK(left == right);
    // Building the reduced square directly must agree with multiplying.
    ChowClass square(c1, c2);
    square.add_term(2, 0, 1);
    CHECK(square == xi * xi);
    CHECK(square * a == left);
  }

  SUBCASE("randomized ring laws") {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<long> chern(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
      const long d1 = chern(rng), d2 = chern(rng);
      const ChowClass p = rand_degree_one(rng, d1, d2);
      const ChowClass q = rand_degree_one(rng, d1, d2);
      const ChowClass r = rand_degree_one(rng, d1, d2);
      CHECK(p * q == q * p);
      CHECK((p * q) * r == p * (q * r));
      CHECK((p + q) * r == p * r + q * r);
      const Rational s = rand_rational(rng);
      CHECK(p.scaled(s) * q == (p * q).scaled(s));
      CHECK(p - p == ChowClass(d1, d2));
      CHECK(-(p * r) == p.scaled(-1) * r);
    }
  }

  SUBCASE("triple integrals are symmetric in their arguments") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
      const ChowClass p = rand_degree_one(rng, c1, c2);
      const ChowClass q = rand_degree_one(rng, c1, c2);
      const ChowClass r = rand_degree_one(rng, c1, c2);
      const Rational base = pbundle_intersection(c1, c2, {p, q, r});
      CHECK(pbundle_intersection(c1, c2, {p, r, q}) == base);
      CHECK(pbundle_intersection(c1, c2, {q, p, r}) == base);
      CHECK(pbundle_intersection(c1, c2, {q, r, p}) == base);
      CHECK(pbundle_intersection(c1, c2, {r, p, q}) == base);
      CHECK(pbundle_intersection(c1, c2, {r, q, p}) == base);
    }
  }
}

TEST_CASE("derived identities hold across the Chern-number grid") {
  for (long c1 = -10; c1 <= 10; ++c1) {
    for (long c2 = -10; c2 <= 10; ++c2) {
      const ChowClass xi = ChowClass::xi(c1, c2);
      const ChowClass a = ChowClass::hyperplane(c1, c2);
      CHECK((xi * xi * a).integral() == c1);
      CHECK((xi * xi * xi).integral() == c1 * c1 - c2);
      CHECK((xi * a * a).integral() == 1);
      CHECK((a * a * a).is_zero());
    }
  }
}

TEST_CASE("triple intersections of degree-one classes") {
  SUBCASE("trivial bundle sends xi^3 to zero") {
    const ChowClass xi = ChowClass::xi(0, 0);
    CHECK(pbundle_intersection(0, 0, {xi, xi, xi}) == 0);
  }

  SUBCASE("documented values in the (-1, 3) context") {
    const ChowClass xi = ChowClass::xi(-1, 3);
    const ChowClass a = ChowClass::hyperplane(-1, 3);
    const ChowClass k = xi.scaled(-2) + a.scaled(-4);
    const ChowClass g = xi + a;
    CHECK(pbundle_intersection(-1, 3, {k, k, k}) == -32);
    CHECK(pbundle_intersection(-1, 3, {g, g, g}) == -2);
    CHECK(pbundle_intersection(-1, 3, {k, k, g}) == 4);
    CHECK(pbundle_intersection(-1, 3, {k, g, g}) == 2);
  }

  SUBCASE("randomized agreement with the closed-form oracle") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> chern(-8, 8);
    for (int trial = 0; trial < 100; ++trial) {
      const long c1 = chern(rng), c2 = chern(rng);
      std::array<Rational, 3> as, bs;
      std::array<ChowClass, 3> cs{ChowClass(c1, c2), ChowClass(c1, c2), ChowClass(c1, c2)};
      for (int i = 0; i < 3; ++i) {
        as[i] = rand_rational(rng);
        bs[i] = rand_rational(rng);
        cs[i].add_term(1, 0, as[i]);
        cs[i].add_term(0, 1, bs[i]);
      }
      CHECK(pbundle_intersection(c1, c2, cs) == triple_oracle(c1, c2, as, bs));
    }
  }

  SUBCASE("zero classes integrate to zero") {
    const ChowClass zero(5, 7);
    const ChowClass xi = ChowClass::xi(5, 7);
    CHECK(pbundle_intersection(5, 7, {zero, xi, xi}) == 0);
  }

  SUBCASE("degree and context validation") {
    const ChowClass xi = ChowClass::xi(-1, 3);
    const ChowClass a = ChowClass::hyperplane(-1, 3);
    CHECK_THROWS_WITH_AS(pbundle_intersection(-1, 3, {xi * xi, a, a}),
                         "triple intersection requires degree-1 classes", ContractError);
    ChowClass mixed(-1, 3);
    mixed.add_term(1, 0, 1);
    mixed.add_term(0, 0, 1);
    CHECK_THROWS_WITH_AS(pbundle_intersection(-1, 3, {mixed, a, a}),
                         "triple intersection requires degree-1 classes", ContractError);
    CHECK_THROWS_WITH_AS(pbundle_intersection(0, 0, {xi, xi, xi}),
                         "intersection classes from different bundle contexts", ContractError);
  }
}

TEST_CASE("integral accepts only degree-three classes") {
  const ChowClass xi = ChowClass::xi(-1, 3);
  const ChowClass a = ChowClass::hyperplane(-1, 3);
  CHECK_THROWS_WITH_AS(xi.integral(), "integral requires a degree-3 class", ContractError);
  CHECK_THROWS_WITH_AS((xi * a).integral(), "integral requires a degree-3 class",
                       ContractError);
  ChowClass mixed(-1, 3);
  mixed.add_term(1, 2, 4);
  mixed.add_term(0, 1, 1);
  CHECK_THROWS_WITH_AS(mixed.integral(), "integral requires a degree-3 class", ContractError);
  CHECK((xi * a * a).integral() == 1);
}

TEST_CASE("ring operations validate the bundle context") {
  const ChowClass left = ChowClass::xi(0, 0);
  const ChowClass right = ChowClass::xi(-1, 3);
  CHECK_THROWS_WITH_AS(left + right, "intersection classes from different bundle contexts",
                       ContractError);
  CHECK_THROWS_WITH_AS(left - right, "intersection classes from different bundle contexts",
                       ContractError);
  CHECK_THROWS_WITH_AS(left * right, "intersection classes from different bundle contexts",
                       ContractError);
  CHECK(left != right);
}

TEST_CASE("canonical class decomposes through the section class") {
  const ChowClass xi = ChowClass::xi(-1, 3);
  const ChowClass a = ChowClass::hyperplane(-1, 3);
  const ChowClass k = xi.scaled(-2) + a.scaled(-4);
  const ChowClass g = xi + a;
  CHECK(k == (g + a).scaled(-2));
  CHECK(-k == g.scaled(2) + a.scaled(2));
}

TEST_CASE("double-projection numerology report") {
  const SarkisovReport rep = sarkisov_numerology();
  CHECK(rep.k3 == -32);
  CHECK(rep.k2g == 4);
  CHECK(rep.kg2 == 2);
  CHECK(rep.g3 == -2);
  CHECK(rep.gplus3 == 1);
  CHECK(rep.ky3 == -40);
  CHECK(rep.h3 == 5);

  // The blow-down expansion and the degree formula must hold between fields.
  CHECK(rep.ky3 == rep.k3 - 6 * rep.k2g + 12 * rep.kg2 - 8 * rep.gplus3);
  CHECK(rep.h3 * Rational(-8) == rep.ky3);

  // The bundle-side entries must coincide with direct triple intersections.
  const ChowClass xi = ChowClass::xi(-1, 3);
  const ChowClass a = ChowClass::hyperplane(-1, 3);
  const ChowClass k = xi.scaled(-2) + a.scaled(-4);
  const ChowClass g = xi + a;
  CHECK(rep.k3 == pbundle_intersection(-1, 3, {k, k, k}));
  CHECK(rep.k2g == pbundle_intersection(-1, 3, {k, k, g}));
  CHECK(rep.kg2 == pbundle_intersection(-1, 3, {k, g, g}));
  CHECK(rep.g3 == pbundle_intersection(-1, 3, {g, g, g}));
}

TEST_CASE("quadric link divisor report") {
  const QuadricLinkReport rep = quadric_link_divisors();
  CHECK(rep.z_prime == std::array<long, 2>{1, -2});
  CHECK(rep.q0_prime == std::array<long, 2>{0, 1});
  CHECK(rep.pushforward_h == 1);
  CHECK(rep.all_hold);

  REQUIRE(rep.identities.size() == 4);
  CHECK(rep.identities[0].name == "Z' = q*H - 2E");
  CHECK(rep.identities[1].name == "q_* Z' = H");
  CHECK(rep.identities[2].name == "-K_Y = 2 q_* Z'");
  CHECK(rep.identities[3].name == "Q0' = E");
  for (const LatticeIdentity& id : rep.identities) {
    CHECK(id.holds);
    CHECK_FALSE(id.lhs.empty());
    CHECK_FALSE(id.rhs.empty());
  }
  CHECK(rep.identities[0].lhs == "q*H - 2*E");
  CHECK(rep.identities[3].rhs == "E");
}
