#pragma once

#include <array>
#include <optional>
#include <string>

#include "v5/matrix.hpp"
#include "v5/projective.hpp"
#include "v5/scalar.hpp"
#include "v5/ternary.hpp"

namespace v5 {

/// Ternary quadratic form by its symmetric 3x3 Gram matrix; the conic is
/// Q = V(f) with f(v) = v^T M v, smooth iff det(M) != 0.  Determinant and
/// adjugate (the Gram of the dual conic Q*) are cached at construction.
class QuadraticForm {
 public:
  explicit QuadraticForm(const Matrix& gram);
  static QuadraticForm diagonal(const std::array<Scalar, 3>& d);

  const Matrix& gram() const { return gram_; }
  const Scalar& det() const { return det_; }
  const Matrix& adjugate() const { return adj_; }
  bool smooth() const { return !det_.is_zero(); }
  QuadraticForm dual() const { return QuadraticForm(adj_); }
  /// Strongest field among the entries (entries may mix Q into one extension).
  FieldKind field() const { return field_; }

  Scalar evaluate(const ProjPoint& p) const { return evaluate_vec(p.coords()); }
  Scalar evaluate_vec(const std::array<Scalar, 3>& v) const;
  /// Polarization B(u, v) = u^T M v; f(v) = B(v, v).
  Scalar bilinear(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v) const;

  TernaryForm form() const { return TernaryForm::quadratic_from_gram(gram_); }
  std::string str() const { return form().str(); }
  bool operator==(const QuadraticForm& o) const { return gram_ == o.gram_; }

 private:
  Matrix gram_;
  Scalar det_;
  Matrix adj_;
  FieldKind field_;
};

struct ConicInvariants {
  bool smooth;
  Scalar det;
  QuadraticForm dual;
};

ConicInvariants conic_invariants(const QuadraticForm& f);

/// Line with coefficient vector N·u.  A point lies on its own polar iff it
/// lies on the conic of N.
ProjLine polar_line(const QuadraticForm& n, const ProjPoint& u);

/// Why a conic has no rational point: either all diagonal coefficients of
/// the reduced form share a sign, or a quadratic-residue condition fails at
/// an odd prime dividing one coefficient.
struct LocalObstruction {
  std::array<Integer, 3> reduced_form;  // squarefree, pairwise coprime diagonal
  bool definite = false;
  Integer prime = 0;  // failing odd prime when not definite
  std::string condition;
};

struct PointCertificate {
  bool solvable = false;
  std::optional<ProjPoint> witness;           // present iff solvable
  std::optional<LocalObstruction> obstruction;  // present iff insolvable
};

/// Decides solvability over Q by reduction to a squarefree pairwise-coprime
/// diagonal form and the classical residue conditions, then produces a
/// witness by exhaustive search within the Holzer bound (|X| <= sqrt|bc|,
/// |Y| <= sqrt|ac|, |Z| <= sqrt|ab|), mapped back through the change of
/// variables and verified exactly.  The environment variable QF_MAX_SEARCH
/// caps the per-coordinate search; a capped search that fails is an error,
/// never a guess.
PointCertificate has_rational_point(const QuadraticForm& f);

/// Degree-2 map P^1 -> P^2 with image the conic, built from the pencil of
/// lines through a given rational point of it.
struct ConicParametrization {
  /// Coefficients of each coordinate as a binary quadratic, in the fixed
  /// order (t^2, t*u, u^2).
  std::array<std::array<Scalar, 3>, 3> forms;
  ProjPoint base;  // image of [t:u] = [0:1]

  ProjPoint at(const Scalar& t, const Scalar& u) const;
};

/// Requires f smooth and f(p) = 0.  Over Q the output is normalized to
/// content-free integer coefficients with the first nonzero t*u coefficient
/// positive; over other fields the construction's raw output is returned.
ConicParametrization parametrize(const QuadraticForm& f, const ProjPoint& p);

/// Galois tangent descent: for p on the conic with coordinates in Q(√d),
/// returns p itself when p is Galois-invariant, otherwise the intersection
/// of the tangent lines at p and its conjugate, a Q-point off the conic.
ProjPoint descend_rational_point(const QuadraticForm& f, const ProjPoint& p);

namespace detail {

/// Decision plus capped witness search for an integer diagonal form
/// a0 X^2 + a1 Y^2 + a2 Z^2 = 0 with nonzero coefficients.  The witness
/// search bounds are the Holzer bounds capped at the given value; returns a
/// primitive integer witness when the capped search finds one, nullopt when
/// the form is locally obstructed or the capped search comes up empty.
std::optional<std::array<Integer, 3>> solve_diagonal_capped(const std::array<Integer, 3>& a,
                                                            const Integer& cap);

}  // namespace detail

}  // namespace v5
