#include "doctest.h"

#include "v5/error.hpp"
#include "v5/scalar.hpp"

#include <random>
#include <vector>

using namespace v5;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  return make_rational(num(rng), den(rng));
}

Poly2 rand_poly(std::mt19937_64& rng, int max_degree = 2) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  Poly2 p;
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j) p.set_coeff(i, j, Rational(coeff(rng)));
  return p;
}

Poly2 rand_nonzero_poly(std::mt19937_64& rng, int max_degree = 2) {
  for (;;) {
    Poly2 p = rand_poly(rng, max_degree);
    if (!p.is_zero()) return p;
  }
}

Scalar rand_quadratic(std::mt19937_64& rng, long d) {
  return Scalar::quadratic(rand_rational(rng), rand_rational(rng), d);
}

Scalar rand_function(std::mt19937_64& rng) {
  return Scalar::function(rand_poly(rng), rand_nonzero_poly(rng, 1));
}

}  // namespace

TEST_CASE("rational construction and rendering") {
  CHECK(rational_str(make_rational(6, 4)) == "3/2");
  CHECK(rational_str(make_rational(-6, 4)) == "-3/2");
  CHECK(rational_str(make_rational(6, -4)) == "-3/2");
  CHECK(rational_str(make_rational(0, 5)) == "0");
  CHECK(rational_str(make_rational(8, 2)) == "4");
  CHECK_THROWS_AS(make_rational(1, 0), ContractError);
  CHECK(Scalar(make_rational(-22, 7)).str() == "-22/7");
  CHECK(Scalar(7).str() == "7");
}

TEST_CASE("squarefree detection") {
  CHECK(is_squarefree(Integer(1)));
  CHECK(is_squarefree(Integer(2)));
  CHECK(is_squarefree(Integer(-2)));
  CHECK(is_squarefree(Integer(30)));
  CHECK(is_squarefree(Integer(-105)));
  CHECK_FALSE(is_squarefree(Integer(4)));
  CHECK_FALSE(is_squarefree(Integer(12)));
  CHECK_FALSE(is_squarefree(Integer(-18)));
  CHECK_FALSE(is_squarefree(Integer(49)));
  CHECK_THROWS_AS(is_squarefree(Integer(0)), ContractError);
}

TEST_CASE("quadratic canonical strings") {
  CHECK(Scalar::sqrt_of(2).str() == "(0+1√2)/1");
  CHECK(Scalar::sqrt_of(-1).str() == "(0+1√-1)/1");
  const Scalar x = Scalar(1) + Scalar(2) * Scalar::sqrt_of(5) * Scalar(make_rational(1, 3));
  CHECK(x.str() == "(3+2√5)/3");
  const Scalar y = Scalar(make_rational(-7, 4)) * Scalar::sqrt_of(2) - Scalar(make_rational(5, 6));
  CHECK(y.str() == "(-10-21√2)/12");
}

TEST_CASE("quadratic construction contract") {
  CHECK_THROWS_AS(Scalar::sqrt_of(0), ContractError);
  CHECK_THROWS_AS(Scalar::sqrt_of(1), ContractError);
  CHECK_THROWS_AS(Scalar::sqrt_of(4), ContractError);
  CHECK_THROWS_AS(Scalar::sqrt_of(12), ContractError);
  CHECK_NOTHROW(Scalar::sqrt_of(-1));
  CHECK_NOTHROW(Scalar::sqrt_of(-6));
  // b == 0 collapses to the rational kind.
  const Scalar collapsed = Scalar::quadratic(make_rational(3, 2), 0, 5);
  CHECK(collapsed.kind() == FieldKind::Rational);
  CHECK(collapsed.rational() == make_rational(3, 2));
  // sqrt(2)*sqrt(2) collapses as well.
  const Scalar two = Scalar::sqrt_of(2) * Scalar::sqrt_of(2);
  CHECK(two.kind() == FieldKind::Rational);
  CHECK(two == Scalar(2));
}

TEST_CASE("rational function canonical strings") {
  CHECK(Scalar::s().str() == "(s)/(1)");
  CHECK((Scalar::s() + 1).str() == "(s + 1)/(1)");
  const Scalar collapsed = (Scalar::s() * Scalar::s() - 1) / (Scalar::s() - 1);
  CHECK(collapsed.str() == "(s + 1)/(1)");
  const Scalar half_t_over_s = Scalar::t() / (Scalar(2) * Scalar::s());
  CHECK(half_t_over_s.str() == "(1/2*t)/(s)");
  const Scalar st = (Scalar::s() * Scalar::t() + 1) / (Scalar::s() - Scalar::t());
  CHECK(st.str() == "(s*t + 1)/(s - t)");
}

TEST_CASE("rational function canonical form") {
  // Denominator is monic and the fraction is reduced.
  const Scalar x = (Scalar(2) * Scalar::s() + 2) / (Scalar(4) * Scalar::s() - 4);
  const RatFunc& f = x.function_value();
  CHECK(f.den.leading_coeff() == 1);
  CHECK(poly2_gcd(f.num, f.den).is_constant());
  // A constant ratio collapses to the rational kind.
  const Scalar c = (Scalar(3) * Scalar::s()) / (Scalar(2) * Scalar::s());
  CHECK(c.kind() == FieldKind::Rational);
  CHECK(c == Scalar(make_rational(3, 2)));
}

TEST_CASE("polynomial rendering follows graded-lex descending order") {
  Poly2 p;
  p.set_coeff(2, 1, Rational(3));
  p.set_coeff(1, 0, make_rational(-1, 2));
  p.set_coeff(0, 0, Rational(7));
  CHECK(p.str() == "3*s^2*t - 1/2*s + 7");
  CHECK(Poly2().str() == "0");
  Poly2 mono;
  mono.set_coeff(0, 2, Rational(-1));
  CHECK(mono.str() == "-t^2");
}

TEST_CASE("polynomial arithmetic properties") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly2 a = rand_poly(rng);
    const Poly2 b = rand_poly(rng);
    const Poly2 c = rand_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Poly2());
    // Evaluation is a ring homomorphism.
    const Rational sv = rand_rational(rng);
    const Rational tv = rand_rational(rng);
    CHECK((a * b).evaluate(sv, tv) == a.evaluate(sv, tv) * b.evaluate(sv, tv));
    CHECK((a + b).evaluate(sv, tv) == a.evaluate(sv, tv) + b.evaluate(sv, tv));
  }
}

TEST_CASE("exact polynomial division") {
  std::mt19937_64 rng(20240812);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly2 a = rand_poly(rng);
    const Poly2 b = rand_nonzero_poly(rng);
    const auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  // s^2 + 1 is not divisible by s.
  Poly2 num;
  num.set_coeff(2, 0, Rational(1));
  num.set_coeff(0, 0, Rational(1));
  CHECK_FALSE(num.divide_exact(Poly2::var_s()).has_value());
}

TEST_CASE("polynomial gcd properties") {
  std::mt19937_64 rng(20240813);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly2 a = rand_poly(rng, 1);
    const Poly2 b = rand_poly(rng, 1);
    const Poly2 g = poly2_gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK_FALSE(g.is_zero());
    CHECK(g.leading_coeff() == 1);
    if (!a.is_zero()) CHECK(a.divide_exact(g).has_value());
    if (!b.is_zero()) CHECK(b.divide_exact(g).has_value());
    // Scaling both arguments by a common factor scales the gcd.
    const Poly2 m = rand_nonzero_poly(rng, 1);
    const Poly2 gm = poly2_gcd(a * m, b * m);
    const Poly2 expected = (g * m).scaled(Rational(1) / (g * m).leading_coeff());
    if (!a.is_zero() || !b.is_zero()) CHECK(gm == expected);
  }
  CHECK(poly2_gcd(Poly2(), Poly2()).is_zero());
  Poly2 twos = Poly2::var_s().scaled(Rational(2));
  CHECK(poly2_gcd(Poly2(), twos) == Poly2::var_s());
}

TEST_CASE("field axioms hold in each scalar field") {
  std::mt19937_64 rng(20240814);
  std::vector<std::vector<Scalar>> pools;
  // Pool per field: rationals, two quadratic fields, rational functions.
  for (int kind = 0; kind < 4; ++kind) {
    std::vector<Scalar> pool;
    for (int i = 0; i < 12; ++i) {
      switch (kind) {
        case 0: pool.emplace_back(rand_rational(rng)); break;
        case 1: pool.push_back(rand_quadratic(rng, 2)); break;
        case 2: pool.push_back(rand_quadratic(rng, -3)); break;
        default: pool.push_back(rand_function(rng)); break;
      }
    }
    pools.push_back(std::move(pool));
  }
  for (const auto& pool : pools) {
    for (size_t i = 0; i + 2 < pool.size(); i += 3) {
      const Scalar& a = pool[i];
      const Scalar& b = pool[i + 1];
      const Scalar& c = pool[i + 2];
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + 0 == a);
      CHECK(a * 1 == a);
      CHECK(a - a == Scalar(0));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar(1));
        CHECK(b / a * a == b);
      }
    }
  }
}

TEST_CASE("string round-trip is the identity") {
  std::mt19937_64 rng(20240815);
  for (int trial = 0; trial < 25; ++trial) {
    const Scalar r = Scalar(rand_rational(rng));
    CHECK(parse_scalar(r.str()) == r);
    const Scalar q = rand_quadratic(rng, 7);
    CHECK(parse_scalar(q.str()) == q);
    const Scalar qneg = rand_quadratic(rng, -5);
    CHECK(parse_scalar(qneg.str()) == qneg);
    const Scalar f = rand_function(rng);
    CHECK(parse_scalar(f.str()) == f);
  }
}

TEST_CASE("parser grammar") {
  CHECK(parse_scalar("3/4") == Scalar(make_rational(3, 4)));
  CHECK(parse_scalar("-3/4") == Scalar(make_rational(-3, 4)));
  CHECK(parse_scalar("2^3") == Scalar(8));
  CHECK(parse_scalar("sqrt(2)") == Scalar::sqrt_of(2));
  CHECK(parse_scalar("√2") == Scalar::sqrt_of(2));
  CHECK(parse_scalar("sqrt(-1)") == Scalar::sqrt_of(-1));
  CHECK(parse_scalar("1 + 2*sqrt(5)") == Scalar(1) + Scalar(2) * Scalar::sqrt_of(5));
  // The leading numerator applies to the whole parenthesized group.
  const Scalar parsed = parse_scalar("(1+2√5)/3");
  CHECK(parsed == (Scalar(1) + Scalar(2) * Scalar::sqrt_of(5)) / Scalar(3));
  CHECK(parse_scalar("s*t + 1") == Scalar::s() * Scalar::t() + 1);
  CHECK(parse_scalar("(s+t)^2") ==
        Scalar::s() * Scalar::s() + 2 * Scalar::s() * Scalar::t() + Scalar::t() * Scalar::t());
  CHECK(parse_scalar("1/(s-t)") == Scalar(1) / (Scalar::s() - Scalar::t()));
  CHECK(parse_scalar(" 5 ") == Scalar(5));
}

TEST_CASE("parser rejections") {
  CHECK_THROWS_AS(parse_scalar(""), ContractError);
  CHECK_THROWS_AS(parse_scalar("x"), ContractError);
  CHECK_THROWS_AS(parse_scalar("sqrt(4)"), ContractError);
  CHECK_THROWS_AS(parse_scalar("sqrt(0)"), ContractError);
  CHECK_THROWS_AS(parse_scalar("sqrt(1)"), ContractError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ContractError);
  CHECK_THROWS_AS(parse_scalar("2*("), ContractError);
  CHECK_THROWS_AS(parse_scalar("s^-1"), ContractError);
  // Mixing incompatible fields is rejected at parse time.
  CHECK_THROWS_AS(parse_scalar("sqrt(2) + sqrt(3)"), ContractError);
  CHECK_THROWS_AS(parse_scalar("s + sqrt(2)"), ContractError);
}

TEST_CASE("field promotion and mixing rules") {
  const Scalar q = Scalar(1) + Scalar::sqrt_of(2);
  const Scalar f = Scalar::s() + 1;
  // Rationals embed in either extension.
  CHECK((q + Scalar(make_rational(1, 2))).kind() == FieldKind::Quadratic);
  CHECK((f * Scalar(3)).kind() == FieldKind::Function);
  // Same radicand combines; distinct radicands do not.
  CHECK((q + Scalar::sqrt_of(2)).kind() == FieldKind::Quadratic);
  CHECK_THROWS_AS(q + Scalar::sqrt_of(3), ContractError);
  CHECK_THROWS_AS(q * Scalar::sqrt_of(-1), ContractError);
  CHECK_THROWS_AS(q + f, ContractError);
  CHECK_THROWS_AS(f * q, ContractError);
  // Division by zero.
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), ContractError);
  CHECK_THROWS_AS(q / Scalar(0), ContractError);
  CHECK_THROWS_AS(Scalar(0).inverse(), ContractError);
}

TEST_CASE("galois conjugation") {
  std::mt19937_64 rng(20240816);
  for (int trial = 0; trial < 20; ++trial) {
    const Scalar x = rand_quadratic(rng, 3);
    const Scalar y = rand_quadratic(rng, 3);
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x.conj().conj() == x);
    // Norm and trace land in the rationals.
    CHECK((x * x.conj()).kind() == FieldKind::Rational);
    CHECK((x + x.conj()).kind() == FieldKind::Rational);
  }
  const Scalar r = Scalar(make_rational(5, 3));
  CHECK(r.conj() == r);
  CHECK_THROWS_AS(Scalar::s().conj(), ContractError);
}
