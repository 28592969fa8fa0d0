#include "v5/matrix.hpp"

#include <utility>

#include "v5/error.hpp"

namespace v5 {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows < 0 || cols < 0) throw ContractError("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::vector<std::vector<Scalar>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ContractError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

Scalar& Matrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw ContractError("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

const Scalar& Matrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw ContractError("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

std::vector<Scalar> Matrix::row(int i) const {
  std::vector<Scalar> out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

std::vector<Scalar> Matrix::col(int j) const {
  std::vector<Scalar> out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ContractError("matrix shape mismatch in product");
  Matrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * c;
  return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ContractError("vector length mismatch");
  std::vector<Scalar> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const Scalar& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::rref(int* rank_out) const {
  Matrix m = *this;
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int pivot = -1;
    for (int i = lead; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(m.at(lead, j), m.at(pivot, j));
    const Scalar inv = m.at(lead, col).inverse();
    for (int j = 0; j < cols_; ++j) m.at(lead, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      const Scalar f = m.at(i, col);
      for (int j = 0; j < cols_; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    ++lead;
  }
  if (rank_out) *rank_out = lead;
  return m;
}

int Matrix::rank() const {
  int r = 0;
  rref(&r);
  return r;
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw ContractError("determinant of a non-square matrix");
  Matrix m = *this;
  Scalar det = 1;
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int i = col; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(pivot, j));
      det = -det;
    }
    det *= m.at(col, col);
    const Scalar inv = m.at(col, col).inverse();
    for (int i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      const Scalar f = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
  const Matrix r = rref();
  // Locate pivot columns.
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols_, false);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j)
      if (!r.at(i, j).is_zero()) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
  }
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& rhs) const {
  if (static_cast<int>(rhs.size()) != rows_) throw ContractError("rhs length mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = rhs[i];
  }
  const Matrix r = aug.rref();
  std::vector<Scalar> x(cols_);
  for (int i = 0; i < rows_; ++i) {
    int lead = -1;
    for (int j = 0; j <= cols_; ++j)
      if (!r.at(i, j).is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    if (lead == cols_) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
    x[lead] = r.at(i, cols_);
  }
  return x;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw ContractError("inverse of a non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  int rank = 0;
  const Matrix r = aug.rref(&rank);
  // rref ranks the whole augmented block, so check the left half explicitly.
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const Scalar want = i == j ? Scalar(1) : Scalar(0);
      if (r.at(i, j) != want) throw ContractError("matrix is singular");
    }
  }
  Matrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

Matrix Matrix::adjugate3() const {
  if (rows_ != 3 || cols_ != 3) throw ContractError("adjugate is implemented for 3x3 matrices");
  Matrix adj(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      // Cofactor with the sign folded into the cyclic index choice.
      adj.at(i, j) = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    }
  return adj;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < cols_; ++j) out += (j ? ", " : "") + at(i, j).str();
  }
  return out + "]";
}

Diagonalization diagonalize_symmetric(const Matrix& m) {
  if (!m.is_symmetric()) throw ContractError("congruence reduction requires a symmetric matrix");
  const int n = m.rows();
  Matrix d = m;
  Matrix p = Matrix::identity(n);

  // Elementary congruence steps: every column operation applied to D is
  // mirrored by the same row operation, and recorded as a column op on P.
  auto swap_cong = [&](int a, int b) {
    for (int j = 0; j < n; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (int i = 0; i < n; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (int i = 0; i < n; ++i) std::swap(p.at(i, a), p.at(i, b));
  };
  auto add_cong = [&](int dst, int src, const Scalar& f) {
    for (int j = 0; j < n; ++j) d.at(dst, j) += f * d.at(src, j);
    for (int i = 0; i < n; ++i) d.at(i, dst) += f * d.at(i, src);
    for (int i = 0; i < n; ++i) p.at(i, dst) += f * p.at(i, src);
  };

  for (int i = 0; i < n; ++i) {
    if (d.at(i, i).is_zero()) {
      int j = -1;
      for (int k = i + 1; k < n; ++k)
        if (!d.at(k, k).is_zero()) {
          j = k;
          break;
        }
      if (j >= 0) {
        swap_cong(i, j);
      } else {
        // All remaining diagonal entries vanish; find an off-diagonal one.
        int r = -1, c = -1;
        for (int a = i; a < n && r < 0; ++a)
          for (int b = a + 1; b < n; ++b)
            if (!d.at(a, b).is_zero()) {
              r = a;
              c = b;
              break;
            }
        if (r < 0) break;  // remaining block is identically zero
        add_cong(r, c, Scalar(1));  // makes D[r][r] = 2*D[r][c] nonzero
        if (r != i) swap_cong(i, r);
      }
    }
    const Scalar inv = d.at(i, i).inverse();
    for (int k = i + 1; k < n; ++k) {
      if (d.at(i, k).is_zero()) continue;
      add_cong(k, i, -(d.at(i, k) * inv));
    }
  }
  return {d, p};
}

}  // namespace v5
