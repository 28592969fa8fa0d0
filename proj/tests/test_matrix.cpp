#include "doctest.h"

#include "v5/error.hpp"
#include "v5/matrix.hpp"

#include <random>
#include <vector>

using namespace v5;

namespace {

Scalar rand_rational_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return Scalar(make_rational(num(rng), den(rng)));
}

Scalar rand_quadratic_scalar(std::mt19937_64& rng, long d) {
  std::uniform_int_distribution<long> num(-4, 4);
  return Scalar::quadratic(Rational(num(rng)), Rational(num(rng)), d);
}

Scalar rand_function_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-3, 3);
  // Entries of the shape arising in practice: small polynomials in s and t,
  // with an occasional simple fraction.  Elimination still produces genuine
  // rational functions from these through pivot inversion.
  const Scalar num = Scalar(c(rng)) + Scalar(c(rng)) * Scalar::s() + Scalar(c(rng)) * Scalar::t();
  if (c(rng) > 1) return num / (Scalar::s() + 2);
  return num;
}

/// Random scalar of the given field: 0 rational, 1 quadratic, 2 function.
Scalar rand_scalar(std::mt19937_64& rng, int field) {
  switch (field) {
    case 0: return rand_rational_scalar(rng);
    case 1: return rand_quadratic_scalar(rng, 2);
    default: return rand_function_scalar(rng);
  }
}

Matrix rand_matrix(std::mt19937_64& rng, int rows, int cols, int field) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rand_scalar(rng, field);
  return m;
}

Matrix rand_symmetric(std::mt19937_64& rng, int n, int field) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m.at(i, j) = rand_scalar(rng, field);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

bool is_diagonal(const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && !m.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("basic arithmetic and shape checks") {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
  CHECK((a * b) == Matrix::from_rows({{2, 1}, {4, 3}}));
  CHECK((a + b) == Matrix::from_rows({{1, 3}, {4, 4}}));
  CHECK(a.transpose() == Matrix::from_rows({{1, 3}, {2, 4}}));
  CHECK(a.scaled(Scalar(2)) == Matrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(a.apply({1, 1}) == std::vector<Scalar>{Scalar(3), Scalar(7)});
  CHECK_FALSE(a.is_symmetric());
  CHECK(b.is_symmetric());
  CHECK(Matrix(2, 2).is_zero());
  CHECK_THROWS_AS(a * Matrix(3, 3), ContractError);
  CHECK_THROWS_AS(a + Matrix(2, 3), ContractError);
}

TEST_CASE("determinant and inverse") {
  std::mt19937_64 rng(20240821);
  for (int field = 0; field < 3; ++field) {
    for (int trial = 0; trial < 8; ++trial) {
      const Matrix m = rand_matrix(rng, 3, 3, field);
      const Scalar det = m.determinant();
      if (det.is_zero()) {
        CHECK(m.rank() < 3);
        continue;
      }
      CHECK(m.rank() == 3);
      const Matrix inv = m.inverse();
      CHECK(m * inv == Matrix::identity(3));
      CHECK(inv * m == Matrix::identity(3));
    }
  }
  CHECK(Matrix::identity(4).determinant() == Scalar(1));
  CHECK_THROWS_AS(Matrix(2, 3).determinant(), ContractError);
  CHECK_THROWS_AS(Matrix(2, 2).inverse(), ContractError);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(20240822);
  for (int field = 0; field < 3; ++field) {
    const Matrix a = rand_matrix(rng, 3, 3, field);
    const Matrix b = rand_matrix(rng, 3, 3, field);
    CHECK((a * b).determinant() == a.determinant() * b.determinant());
  }
}

TEST_CASE("rref, rank, and kernel") {
  std::mt19937_64 rng(20240823);
  for (int field = 0; field < 3; ++field) {
    for (int trial = 0; trial < 6; ++trial) {
      const Matrix m = rand_matrix(rng, 3, 5, field);
      int rank = -1;
      const Matrix r = m.rref(&rank);
      CHECK(rank == m.rank());
      // Pivots are 1 and are the only nonzero entries in their columns.
      int prev_pivot = -1;
      for (int i = 0; i < rank; ++i) {
        int pivot = -1;
        for (int j = 0; j < r.cols(); ++j)
          if (!r.at(i, j).is_zero()) {
            pivot = j;
            break;
          }
        REQUIRE(pivot >= 0);
        CHECK(pivot > prev_pivot);
        prev_pivot = pivot;
        CHECK(r.at(i, pivot) == Scalar(1));
        for (int k = 0; k < r.rows(); ++k)
          if (k != i) CHECK(r.at(k, pivot).is_zero());
      }
      // Kernel vectors are genuine null vectors and there are cols - rank of them.
      const auto kernel = m.kernel_basis();
      CHECK(static_cast<int>(kernel.size()) == m.cols() - rank);
      for (const auto& v : kernel) {
        const auto image = m.apply(v);
        for (const Scalar& x : image) CHECK(x.is_zero());
      }
    }
  }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  std::mt19937_64 rng(20240824);
  for (int field = 0; field < 3; ++field) {
    for (int trial = 0; trial < 6; ++trial) {
      const Matrix m = rand_matrix(rng, 4, 3, field);
      std::vector<Scalar> x0;
      for (int j = 0; j < 3; ++j) x0.push_back(rand_scalar(rng, field));
      const auto rhs = m.apply(x0);
      const auto sol = m.solve(rhs);
      REQUIRE(sol.has_value());
      CHECK(m.apply(*sol) == rhs);
    }
  }
  // x + y = 1 and x + y = 2 cannot both hold.
  const Matrix bad = Matrix::from_rows({{1, 1}, {1, 1}});
  CHECK_FALSE(bad.solve({Scalar(1), Scalar(2)}).has_value());
}

TEST_CASE("adjugate identity for 3x3 matrices") {
  std::mt19937_64 rng(20240825);
  for (int field = 0; field < 3; ++field) {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix m = rand_matrix(rng, 3, 3, field);
      const Matrix adj = m.adjugate3();
      CHECK(adj * m == Matrix::identity(3).scaled(m.determinant()));
      CHECK(m * adj == Matrix::identity(3).scaled(m.determinant()));
    }
  }
  CHECK_THROWS_AS(Matrix(2, 2).adjugate3(), ContractError);
}

TEST_CASE("congruence diagonalization over every field") {
  std::mt19937_64 rng(20240826);
  for (int field = 0; field < 3; ++field) {
    for (int trial = 0; trial < 8; ++trial) {
      const Matrix m = rand_symmetric(rng, 3, field);
      const Diagonalization dz = diagonalize_symmetric(m);
      CHECK(is_diagonal(dz.D));
      CHECK(dz.P.transpose() * m * dz.P == dz.D);
      CHECK_FALSE(dz.P.determinant().is_zero());
    }
  }
  CHECK_THROWS_AS(diagonalize_symmetric(Matrix::from_rows({{0, 1}, {0, 0}})), ContractError);
}

TEST_CASE("diagonalization of a hyperbolic plane") {
  // Gram matrix of the form xy: zero diagonal forces the off-diagonal rule.
  const Matrix m = Matrix::from_rows({{Scalar(0), Scalar(make_rational(1, 2))},
                                      {Scalar(make_rational(1, 2)), Scalar(0)}});
  const Diagonalization dz = diagonalize_symmetric(m);
  CHECK(is_diagonal(dz.D));
  CHECK(dz.P.transpose() * m * dz.P == dz.D);
  // The two diagonal entries have opposite signs, as the form is indefinite.
  const Rational d0 = dz.D.at(0, 0).rational();
  const Rational d1 = dz.D.at(1, 1).rational();
  CHECK(d0 * d1 < 0);
}

TEST_CASE("diagonalization preserves rank and determinant class") {
  std::mt19937_64 rng(20240827);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = rand_symmetric(rng, 3, 0);
    // Occasionally force a singular matrix by zeroing the last row and column.
    if (trial % 3 == 0) {
      for (int j = 0; j < 3; ++j) {
        m.at(2, j) = Scalar(0);
        m.at(j, 2) = Scalar(0);
      }
    }
    const Diagonalization dz = diagonalize_symmetric(m);
    int diag_rank = 0;
    for (int i = 0; i < 3; ++i)
      if (!dz.D.at(i, i).is_zero()) ++diag_rank;
    CHECK(diag_rank == m.rank());
    // det(D) = det(P)^2 det(M): the determinants differ by a nonzero square.
    const Scalar p = dz.P.determinant();
    CHECK(dz.D.determinant() == p * p * m.determinant());
  }
}
