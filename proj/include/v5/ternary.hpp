#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "v5/matrix.hpp"
#include "v5/scalar.hpp"

namespace v5 {

/// Polynomial in x, y, z over the scalar tower.  Zero coefficients are never
/// stored, so map equality is polynomial equality.
class TernaryForm {
 public:
  TernaryForm() = default;
  static TernaryForm monomial(int i, int j, int k, const Scalar& c);
  static TernaryForm constant(const Scalar& c) { return monomial(0, 0, 0, c); }
  /// a*x + b*y + c*z
  static TernaryForm linear(const std::array<Scalar, 3>& coeffs);
  /// v^T G v for a symmetric 3x3 Gram matrix G.
  static TernaryForm quadratic_from_gram(const Matrix& gram);

  Scalar coeff(int i, int j, int k) const;
  void set_coeff(int i, int j, int k, const Scalar& c);
  const std::map<std::array<int, 3>, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  TernaryForm operator+(const TernaryForm& o) const;
  TernaryForm operator-(const TernaryForm& o) const;
  TernaryForm operator-() const;
  TernaryForm operator*(const TernaryForm& o) const;
  TernaryForm scaled(const Scalar& c) const;
  bool operator==(const TernaryForm& o) const { return terms_ == o.terms_; }
  bool operator!=(const TernaryForm& o) const { return !(*this == o); }

  Scalar evaluate(const std::array<Scalar, 3>& v) const;

  /// Monomial exponents of degree d in descending lexicographic order,
  /// x > y > z; e.g. d = 2: x^2, xy, xz, y^2, yz, z^2.
  static std::vector<std::array<int, 3>> monomial_basis(int d);
  /// Coefficients in monomial_basis(d) order.  Requires the form to be zero
  /// or homogeneous of degree d.
  std::vector<Scalar> coeff_vector(int d) const;

  std::string str() const;

 private:
  std::map<std::array<int, 3>, Scalar> terms_;
};

/// Parses a polynomial expression in x, y, z whose coefficients follow the
/// scalar grammar (integers, fractions, s, t, sqrt(d), parentheses, ^).
TernaryForm parse_ternary_form(std::string_view text);

/// Length of the degree-d graded piece of the quotient by the ideal the
/// generators span: dim S_d - dim (I)_d, computed from an exact rank.
/// Requires d >= 3 and homogeneous generators.
int scheme_length_from_forms(const std::vector<TernaryForm>& generators, int d);

}  // namespace v5
