#pragma once

#include <optional>
#include <string>
#include <vector>

#include "v5/scalar.hpp"

namespace v5 {

/// Dense matrix over the scalar tower, with exact elimination routines.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix from_rows(std::vector<std::vector<Scalar>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j);
  const Scalar& at(int i, int j) const;
  std::vector<Scalar> row(int i) const;
  std::vector<Scalar> col(int j) const;

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_symmetric() const;
  bool is_zero() const;

  int rank() const;
  /// Reduced row echelon form; optionally reports the rank.
  Matrix rref(int* rank_out = nullptr) const;
  /// Requires a square matrix.
  Scalar determinant() const;
  /// Basis of the right kernel (deterministic: RREF free-column vectors).
  std::vector<std::vector<Scalar>> kernel_basis() const;
  /// One solution of Ax = b with all free variables set to zero, or nullopt
  /// when the system is inconsistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& rhs) const;
  /// Requires square and invertible.
  Matrix inverse() const;
  /// Adjugate of a 3x3 matrix: adj(M) * M = det(M) * I.
  Matrix adjugate3() const;

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Result of symmetric congruence reduction: P^T * M * P = D diagonal.
struct Diagonalization {
  Matrix D;
  Matrix P;
};

/// Exact congruence diagonalization of a symmetric matrix.  Pivot selection
/// is deterministic: use M[i][i] when nonzero, else swap in the first later
/// nonzero diagonal entry, else take the first nonzero off-diagonal entry
/// M[r][c] of the remaining block and add row/column c into row/column r.
Diagonalization diagonalize_symmetric(const Matrix& m);

}  // namespace v5
