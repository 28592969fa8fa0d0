#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace v5 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational from a fraction; throws ContractError on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "p" when the denominator is 1, otherwise "p/q" with q > 0 and gcd(p,q) = 1.
std::string rational_str(const Rational& q);

/// True iff |n| is squarefree (n != 0).  Factors by trial division; throws
/// ContractError when the unfactored cofactor cannot be certified.
bool is_squarefree(const Integer& n);

// ---------------------------------------------------------------------------
// Polynomials in s, t over the rationals.
// ---------------------------------------------------------------------------

/// Exponent pair (s-degree, t-degree) ordered by graded lex: total degree
/// first, then s-degree.  Poly2 stores terms in this order, ascending.
struct GrlexLess {
  bool operator()(const std::array<int, 2>& a, const std::array<int, 2>& b) const {
    const int da = a[0] + a[1], db = b[0] + b[1];
    if (da != db) return da < db;
    return a[0] < b[0];
  }
};

class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(const Rational& c);
  static Poly2 var_s();
  static Poly2 var_t();

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Requires is_constant(); the zero polynomial yields 0.
  Rational constant_value() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in_t() const;

  /// Leading coefficient in graded-lex order.
  Rational leading_coeff() const;
  const std::map<std::array<int, 2>, Rational, GrlexLess>& terms() const { return terms_; }
  void set_coeff(int s_exp, int t_exp, const Rational& c);
  Rational coeff(int s_exp, int t_exp) const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator-() const;
  Poly2 operator*(const Poly2& o) const;
  Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
  Poly2& operator-=(const Poly2& o) { return *this = *this - o; }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
  bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly2& o) const { return !(*this == o); }

  /// Exact quotient when the division leaves no remainder.
  std::optional<Poly2> divide_exact(const Poly2& divisor) const;

  Poly2 scaled(const Rational& c) const;
  Rational evaluate(const Rational& s, const Rational& t) const;

  /// Terms in graded-lex descending order, e.g. "3*s^2*t - 1/2*s + 7".
  std::string str() const;

 private:
  // No zero coefficients are stored, so map equality is canonical equality.
  std::map<std::array<int, 2>, Rational, GrlexLess> terms_;
};

/// Nonzero-input GCD, normalized monic in graded-lex leading coefficient.
/// gcd(0, b) = normalized b; gcd(0, 0) = 0.
Poly2 poly2_gcd(const Poly2& a, const Poly2& b);

// ---------------------------------------------------------------------------
// Scalar: element of Q, Q(sqrt(d)), or Q(s,t).
// ---------------------------------------------------------------------------

/// a + b*sqrt(d) with d squarefree, d not in {0, 1}.  b == 0 never occurs in a
/// stored Scalar (such values collapse to Rational).
struct QuadElem {
  Rational a;
  Rational b;
  long d = 0;
};

/// num/den with den != 0; stored in canonical form: gcd(num, den) = 1 and den
/// monic in its graded-lex leading coefficient.  A constant RatFunc never
/// occurs in a stored Scalar (collapses to Rational).
struct RatFunc {
  Poly2 num;
  Poly2 den;
};

enum class FieldKind { Rational, Quadratic, Function };

class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int n) : value_(Rational(n)) {}  // NOLINT: implicit by design
  Scalar(long n) : value_(Rational(static_cast<long>(n))) {}
  Scalar(const Rational& q) : value_(q) {}
  Scalar(const Integer& n) : value_(Rational(n)) {}

  static Scalar quadratic(const Rational& a, const Rational& b, long d);
  static Scalar sqrt_of(long d) { return quadratic(0, 1, d); }
  static Scalar function(const Poly2& num, const Poly2& den);
  static Scalar poly(const Poly2& p) { return function(p, Poly2(Rational(1))); }
  static Scalar s() { return poly(Poly2::var_s()); }
  static Scalar t() { return poly(Poly2::var_t()); }

  FieldKind kind() const;
  bool is_rational() const { return kind() == FieldKind::Rational; }
  bool is_zero() const;
  bool is_one() const;

  /// Requires kind() == Rational.
  const Rational& rational() const;
  /// Requires kind() == Quadratic.
  const QuadElem& quadratic_value() const;
  /// Requires kind() == Function.
  const RatFunc& function_value() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  /// Throws ContractError on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Galois conjugate a - b*sqrt(d); identity on Q; rejects Q(s,t).
  Scalar conj() const;

  /// Canonical text: "p/q", "(p+q√d)/r" with integral p, q, r, r >= 1,
  /// gcd(p, q, r) = 1, or "(num)/(den)".
  std::string str() const;

 private:
  explicit Scalar(std::variant<Rational, QuadElem, RatFunc> v) : value_(std::move(v)) {}
  // Fast paths for arithmetic on already-validated representations.
  static Scalar quad_collapse(const Rational& a, const Rational& b, long d);
  static Scalar func_collapse(const Poly2& num, const Poly2& den);

  std::variant<Rational, QuadElem, RatFunc> value_;
};

Scalar operator+(int a, const Scalar& b);
Scalar operator-(int a, const Scalar& b);
Scalar operator*(int a, const Scalar& b);

/// Parses the expression grammar accepted everywhere a scalar appears:
/// integers, fractions, s, t, sqrt(d) or √d with d a squarefree integer,
/// +, -, *, /, ^ with nonnegative integer exponents, and parentheses.
/// Mixing distinct radicands, or radicals with s/t, is a ContractError.
Scalar parse_scalar(std::string_view text);

}  // namespace v5
