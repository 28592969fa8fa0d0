#include "doctest.h"

#include "v5/error.hpp"
#include "v5/ternary.hpp"

#include <random>

using namespace v5;

namespace {

TernaryForm x() { return TernaryForm::monomial(1, 0, 0, Scalar(1)); }
TernaryForm y() { return TernaryForm::monomial(0, 1, 0, Scalar(1)); }
TernaryForm z() { return TernaryForm::monomial(0, 0, 1, Scalar(1)); }

}  // namespace

TEST_CASE("parser matches hand-built forms") {
  CHECK(parse_ternary_form("x^2 + y^2 - z^2") == x() * x() + y() * y() - z() * z());
  CHECK(parse_ternary_form("x*y") == x() * y());
  CHECK(parse_ternary_form("2*x*y - 3*z^2") ==
        (x() * y()).scaled(Scalar(2)) - (z() * z()).scaled(Scalar(3)));
  CHECK(parse_ternary_form("(x + y)^2") == x() * x() + (x() * y()).scaled(Scalar(2)) + y() * y());
  CHECK(parse_ternary_form("x^2 + s*y^2") == x() * x() + (y() * y()).scaled(Scalar::s()));
  CHECK(parse_ternary_form("sqrt(2)*x*z") == (x() * z()).scaled(Scalar::sqrt_of(2)));
  CHECK(parse_ternary_form("1/2*y^2") == (y() * y()).scaled(Scalar(make_rational(1, 2))));
  CHECK_THROWS_AS(parse_ternary_form("w^2"), ContractError);
  CHECK_THROWS_AS(parse_ternary_form("x +"), ContractError);
}

TEST_CASE("arithmetic and evaluation") {
  std::mt19937_64 rng(20240831);
  std::uniform_int_distribution<long> c(-5, 5);
  auto rand_form = [&](int max_deg) {
    TernaryForm f;
    for (int i = 0; i <= max_deg; ++i)
      for (int j = 0; i + j <= max_deg; ++j)
        for (int k = 0; i + j + k <= max_deg; ++k) f.set_coeff(i, j, k, Scalar(c(rng)));
    return f;
  };
  for (int trial = 0; trial < 15; ++trial) {
    const TernaryForm a = rand_form(2);
    const TernaryForm b = rand_form(2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == TernaryForm());
    const std::array<Scalar, 3> v = {Scalar(c(rng)), Scalar(c(rng)), Scalar(c(rng))};
    CHECK((a * b).evaluate(v) == a.evaluate(v) * b.evaluate(v));
    CHECK((a + b).evaluate(v) == a.evaluate(v) + b.evaluate(v));
  }
}

TEST_CASE("homogeneity and degree") {
  CHECK(parse_ternary_form("x^2 + y*z").is_homogeneous());
  CHECK_FALSE(parse_ternary_form("x^2 + y").is_homogeneous());
  CHECK(parse_ternary_form("x^3").degree() == 3);
  CHECK(TernaryForm().degree() == -1);
  CHECK(TernaryForm().is_homogeneous());
}

TEST_CASE("monomial basis order is descending lexicographic") {
  const auto basis2 = TernaryForm::monomial_basis(2);
  const std::vector<std::array<int, 3>> want2 = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                                 {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  CHECK(basis2 == want2);
  CHECK(TernaryForm::monomial_basis(3).size() == 10);
  CHECK(TernaryForm::monomial_basis(4).size() == 15);
}

TEST_CASE("coefficient vectors") {
  const TernaryForm f = parse_ternary_form("x^2 + 2*x*y + 3*x*z + 4*y^2 + 5*y*z + 6*z^2");
  const std::vector<Scalar> want = {Scalar(1), Scalar(2), Scalar(3),
                                    Scalar(4), Scalar(5), Scalar(6)};
  CHECK(f.coeff_vector(2) == want);
  CHECK_THROWS_AS(f.coeff_vector(3), ContractError);
  CHECK(TernaryForm().coeff_vector(2) == std::vector<Scalar>(6, Scalar(0)));
}

TEST_CASE("quadratic form from gram matrix") {
  // Off-diagonal Gram entries are halves of the mixed coefficients.
  const Matrix gram = Matrix::from_rows({{Scalar(1), Scalar(make_rational(1, 2)), Scalar(0)},
                                         {Scalar(make_rational(1, 2)), Scalar(4), Scalar(0)},
                                         {Scalar(0), Scalar(0), Scalar(-1)}});
  CHECK(TernaryForm::quadratic_from_gram(gram) == parse_ternary_form("x^2 + x*y + 4*y^2 - z^2"));
  CHECK_THROWS_AS(TernaryForm::quadratic_from_gram(Matrix::from_rows({{0, 1}, {1, 0}})),
                  ContractError);
}

TEST_CASE("scheme length of the three coordinate points") {
  const std::vector<TernaryForm> net = {parse_ternary_form("y*z"), parse_ternary_form("z*x"),
                                        parse_ternary_form("x*y")};
  CHECK(scheme_length_from_forms(net, 3) == 3);
  CHECK(scheme_length_from_forms(net, 4) == 3);
  CHECK(scheme_length_from_forms(net, 5) == 3);
}

TEST_CASE("scheme length of a curvilinear net") {
  const std::vector<TernaryForm> net = {parse_ternary_form("x^2"), parse_ternary_form("x*y"),
                                        parse_ternary_form("y^2 - x*z")};
  CHECK(scheme_length_from_forms(net, 3) == 3);
  CHECK(scheme_length_from_forms(net, 4) == 3);
}

TEST_CASE("scheme length of smaller and larger ideals") {
  // A single point cut out by two coordinate hyperplanes.
  const std::vector<TernaryForm> point = {parse_ternary_form("x"), parse_ternary_form("y")};
  CHECK(scheme_length_from_forms(point, 3) == 1);
  // A conic is a curve: its graded piece keeps growing with the degree.
  const std::vector<TernaryForm> conic = {parse_ternary_form("x^2 + y^2 - z^2")};
  CHECK(scheme_length_from_forms(conic, 3) == 7);
  CHECK(scheme_length_from_forms(conic, 4) == 9);
  // Four general points.
  const std::vector<TernaryForm> four = {parse_ternary_form("x^2 - y^2"),
                                         parse_ternary_form("y^2 - z^2")};
  CHECK(scheme_length_from_forms(four, 3) == 4);
  CHECK(scheme_length_from_forms(four, 4) == 4);
}

TEST_CASE("scheme length contract and degenerate ideals") {
  const std::vector<TernaryForm> net = {parse_ternary_form("y*z")};
  CHECK_THROWS_AS(scheme_length_from_forms(net, 2), ContractError);
  CHECK_THROWS_AS(scheme_length_from_forms({parse_ternary_form("x^2 + y")}, 3), ContractError);
  // The zero ideal leaves the whole graded piece: dim S_3 = 10.
  CHECK(scheme_length_from_forms({}, 3) == 10);
  CHECK(scheme_length_from_forms({TernaryForm()}, 3) == 10);
}

TEST_CASE("rendering") {
  CHECK(parse_ternary_form("x^2 + y*z").str() == parse_ternary_form("y*z + x^2").str());
  CHECK(TernaryForm().str() == "0");
}
