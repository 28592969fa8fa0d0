#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "v5/conic.hpp"
#include "v5/matrix.hpp"
#include "v5/projective.hpp"
#include "v5/ternary.hpp"

namespace v5 {

/// Coordinates of a symmetric square vector in the monomial order
/// (x^2, y^2, z^2, yz, xz, xy).
using Sym2Vector = std::array<Scalar, 6>;

/// Veronese image of a point: coordinates of the square of the linear form
/// with the point's coefficients, in the order above.
Sym2Vector veronese_square(const ProjPoint& l);

/// Coordinates of the product of two linear forms (given by raw coefficient
/// triples), in the order above.
Sym2Vector linear_product(const std::array<Scalar, 3>& a,
                          const std::array<Scalar, 3>& b);

/// Gram matrix of the quadratic form with the given coordinates.
Matrix gram_from_sym2(const Sym2Vector& v);

/// Coordinate vector of the quadratic form with the given Gram matrix.
Sym2Vector sym2_from_gram(const Matrix& gram);

/// A length-3 subscheme of the projective plane, in one of the three shapes
/// that occur as apolar schemes of smooth conics: three distinct reduced
/// points, a double point plus a reduced point, or a single curvilinear
/// point of length 3.
class LengthThreeScheme {
 public:
  enum class Kind { Reduced, DoublePlusOne, Curvilinear };

  /// Three pairwise distinct points.
  static LengthThreeScheme reduced(const ProjPoint& l1, const ProjPoint& l2,
                                   const ProjPoint& l3);

  /// A double point supported at l1 with tangent direction dir (dir must not
  /// be proportional to l1), plus a reduced point l2 distinct from l1.
  static LengthThreeScheme double_plus_one(const ProjPoint& l1,
                                           const ProjPoint& dir,
                                           const ProjPoint& l2);

  /// A curvilinear point of length 3: the 2-jet of an arc
  /// l + eps*dir + eps^2*second.  dir must not be proportional to l; second
  /// may be any vector (including zero).  The jet is stored in a canonical
  /// parametrization, rescaling second to compensate for the normalization
  /// of l and dir.
  static LengthThreeScheme curvilinear(const std::array<Scalar, 3>& l,
                                       const std::array<Scalar, 3>& dir,
                                       const std::array<Scalar, 3>& second);

  Kind kind() const { return kind_; }

  /// Reduced: the three points.  DoublePlusOne: {l1, l2}.
  /// Curvilinear: {l}.
  const std::vector<ProjPoint>& points() const { return points_; }

  /// Tangent direction at the non-reduced point (DoublePlusOne and
  /// Curvilinear only).
  const ProjPoint& direction() const;

  /// Second-order jet coefficient, in the canonical parametrization
  /// (Curvilinear only).
  const std::array<Scalar, 3>& second_order() const;

  /// Spanning vectors of the degree-2 part of the scheme's ideal
  /// complement: squares and products cut out by the scheme, as columns for
  /// apolarity tests.  Always three linearly independent vectors.
  std::vector<Sym2Vector> span_columns() const;

 private:
  LengthThreeScheme() = default;

  Kind kind_ = Kind::Reduced;
  std::vector<ProjPoint> points_;
  std::optional<ProjPoint> direction_;
  std::array<Scalar, 3> second_{};
};

/// Result of testing whether the double form of a scheme spans a given
/// conic.  For a reduced scheme the unique coefficients on the three squares
/// are reported.
struct ApolarCheckResult {
  bool apolar = false;
  std::optional<std::array<Scalar, 3>> lambda;
};

/// Tests exactly whether the form's coefficient vector lies in the span of
/// the scheme's columns.  Requires a smooth form.
ApolarCheckResult apolar_check(const QuadraticForm& f,
                               const LengthThreeScheme& z);

/// A reduced apolar scheme for a smooth form together with the coefficients
/// lambda such that f = sum lambda_i * (l_i)^2.
struct ApolarDecomposition {
  LengthThreeScheme scheme;
  std::array<Scalar, 3> lambda;
};

/// Produces a reduced apolar decomposition of a smooth form by congruence
/// diagonalization; the points are the rows of the inverse change of basis.
ApolarDecomposition apolar_decompose(const QuadraticForm& f);

/// Stratum of an apolar length-3 scheme relative to the dual conic:
///  - O: reduced, no point on the dual conic;
///  - S2: double point on the dual conic with the reduced point on its
///    tangent line;
///  - C6: curvilinear point on the dual conic with tangent direction along
///    the dual conic's tangent line;
///  - OutsideTrichotomy: reduced with at least one point on the dual conic
///    (reportable, not an error).
enum class StratumClass { O, S2, C6, OutsideTrichotomy };

/// Classifies an apolar scheme into its stratum.  Throws ContractError when
/// the scheme is not apolar to the form, or when a non-reduced scheme fails
/// the tangency conditions of its stratum.
StratumClass stratum_classify(const QuadraticForm& f,
                              const LengthThreeScheme& z);

/// A line in the 4-dimensional projectivization of the 5-dimensional
/// quotient W of the space of symmetric squares by the span of a fixed
/// form, recorded by its antisymmetric coordinates together with the basis
/// of linear functionals used for the quotient.
class PlueckerLine {
 public:
  /// coords: the ten pairwise minors in lexicographic index order
  /// (0,1),(0,2),(0,3),(0,4),(1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
  /// basis: a 5x6 matrix of rank 5 whose rows span the functionals cutting
  /// the quotient.  Throws ContractError when the coordinates are zero or
  /// fail the quadratic consistency relations, or the basis is malformed.
  PlueckerLine(std::array<Scalar, 10> coords, Matrix basis);

  const std::array<Scalar, 10>& coords() const { return coords_; }
  const Matrix& basis() const { return basis_; }

  /// A parsable identifier of the quotient basis: the six coefficients of
  /// the form whose kernel functionals were used.
  std::string basis_id() const;

  static const std::array<std::pair<int, int>, 10>& index_pairs();

 private:
  std::array<Scalar, 10> coords_;
  Matrix basis_;
};

/// Deterministic 5x6 rank-5 basis of the functionals vanishing on a nonzero
/// form: the reduced kernel basis of the 1x6 evaluation matrix.
Matrix quotient_basis_for(const QuadraticForm& f);

/// Rebuilds the quotient basis from a basis identifier produced by
/// PlueckerLine::basis_id.
Matrix quotient_basis_from_id(const std::string& id);

/// The line spanned by the images of the three points of a reduced apolar
/// scheme under the Veronese map followed by projection from the form.
/// Throws ContractError when the scheme is not reduced or not apolar.
PlueckerLine trisecant_line(const QuadraticForm& f,
                            const LengthThreeScheme& z);

/// Preimage of a line under the projected Veronese map: the pencil-free net
/// of three conics cutting the corresponding subscheme of the plane,
/// together with that subscheme's length at degree 3.
struct PullbackResult {
  std::vector<QuadraticForm> conics;
  int length = 0;
};

/// Computes the three conics cutting the preimage of the line and the
/// length of the scheme they define.  Throws ContractError when the line's
/// quotient basis does not annihilate the form.
PullbackResult veronese_pullback(const QuadraticForm& f,
                                 const PlueckerLine& line);

/// Whether the dual conic of f vanishes at x, i.e. whether the line dual to
/// x is tangent to the conic of f.  Requires a smooth form.
bool is_special_line(const QuadraticForm& f, const ProjPoint& x);

/// Polar line of x with respect to the dual conic of f.  Requires a smooth
/// form.
ProjLine incidence_locus(const QuadraticForm& f, const ProjPoint& x);

/// Outcome of the cylinder decision for the threefold attached to a smooth
/// conic: existence of an open cylinder over the affine plane (always
/// true), and existence of one over affine 3-space (equivalent to a
/// rational point on the dual conic).
struct CylinderReport {
  bool a2 = true;
  std::string a2_citation;

  enum class A3 { True, False, Unsupported };
  A3 a3 = A3::Unsupported;
  std::string a3_citation;

  /// Witness for the A3 case: a rational point of the dual conic,
  /// presented as the image under the Gram matrix of a rational point of
  /// the conic itself.
  std::optional<ProjPoint> special_line;

  /// Solvability certificate for the conic over the rationals (absent when
  /// the base field is not the rationals).
  std::optional<PointCertificate> certificate;

  /// Set when the decision is unsupported over the given field.
  std::string note;
};

/// Decides cylinder existence.  Over the rationals the decision is exact
/// and certified; over other fields the A3 part is reported as unsupported.
/// Throws ContractError when the form is degenerate.
CylinderReport decide_cylinders(const QuadraticForm& f);

/// A rational point outside the dual conic of f when the dual conic has no
/// rational point, found by Galois descent from a quadratic extension; when
/// the dual conic has a rational point, that point is returned instead.
/// The search runs over square roots of -1 and of +-n for squarefree
/// n <= 50, with witness coordinates capped at 1000 per candidate; throws
/// ContractError when no candidate qualifies within those bounds.
ProjPoint hilbert_rational_point(const QuadraticForm& f);

}  // namespace v5
