#include "v5/vsp.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "v5/error.hpp"

namespace v5 {

namespace {

// Lexicographic index pairs of the ten wedge coordinates on a 5-space.
const std::array<std::pair<int, int>, 10> kIndexPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

int pair_index(int i, int j) {
  for (int k = 0; k < 10; ++k)
    if (kIndexPairs[k].first == i && kIndexPairs[k].second == j) return k;
  throw std::logic_error("bad wedge index pair");
}

// Same canonical representative rule as for points and lines: scale the
// first nonzero entry to 1, and when every entry is rational rescale to a
// primitive integer vector (its first nonzero entry stays positive).
void normalize_projective(std::vector<Scalar>& v) {
  int first = -1;
  for (size_t i = 0; i < v.size() && first < 0; ++i)
    if (!v[i].is_zero()) first = static_cast<int>(i);
  if (first < 0) throw ContractError("cannot normalize the zero vector");
  const Scalar inv = v[first].inverse();
  for (Scalar& c : v) c *= inv;
  for (const Scalar& c : v)
    if (!c.is_rational()) return;
  Integer l = 1;
  for (const Scalar& c : v) l = lcm(l, c.rational().get_den());
  Integer g = 0;
  std::vector<Integer> cleared(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    cleared[i] = v[i].rational().get_num() * (l / v[i].rational().get_den());
    g = gcd(g, cleared[i]);
  }
  for (size_t i = 0; i < v.size(); ++i) v[i] = Scalar(Rational(cleared[i] / g));
}

// Factor c with raw = c * rep (componentwise), rep the normalized
// representative of raw.
Scalar scale_between(const std::array<Scalar, 3>& raw, const ProjPoint& rep) {
  for (int i = 0; i < 3; ++i)
    if (!raw[i].is_zero()) return raw[i] * rep[i].inverse();
  throw ContractError("cannot normalize the zero vector");
}

bool all_zero(const std::vector<Scalar>& v) {
  for (const Scalar& c : v)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<Scalar> to_vector(const Sym2Vector& v) {
  return std::vector<Scalar>(v.begin(), v.end());
}

}  // namespace

Sym2Vector veronese_square(const ProjPoint& l) {
  return linear_product(l.coords(), l.coords());
}

Sym2Vector linear_product(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
  return {a[0] * b[0],
          a[1] * b[1],
          a[2] * b[2],
          a[1] * b[2] + a[2] * b[1],
          a[0] * b[2] + a[2] * b[0],
          a[0] * b[1] + a[1] * b[0]};
}

Matrix gram_from_sym2(const Sym2Vector& v) {
  const Scalar half(make_rational(1, 2));
  Matrix g(3, 3);
  g.at(0, 0) = v[0];
  g.at(1, 1) = v[1];
  g.at(2, 2) = v[2];
  g.at(1, 2) = g.at(2, 1) = v[3] * half;
  g.at(0, 2) = g.at(2, 0) = v[4] * half;
  g.at(0, 1) = g.at(1, 0) = v[5] * half;
  return g;
}

Sym2Vector sym2_from_gram(const Matrix& gram) {
  if (gram.rows() != 3 || gram.cols() != 3 || !gram.is_symmetric())
    throw ContractError("coordinates require a symmetric 3x3 Gram matrix");
  return {gram.at(0, 0),     gram.at(1, 1),     gram.at(2, 2),
          2 * gram.at(1, 2), 2 * gram.at(0, 2), 2 * gram.at(0, 1)};
}

// ---------------------------------------------------------------------------
// Length-3 schemes
// ---------------------------------------------------------------------------

LengthThreeScheme LengthThreeScheme::reduced(const ProjPoint& l1, const ProjPoint& l2,
                                             const ProjPoint& l3) {
  if (l1 == l2 || l1 == l3 || l2 == l3)
    throw ContractError("reduced length-3 scheme requires pairwise distinct points");
  LengthThreeScheme z;
  z.kind_ = Kind::Reduced;
  z.points_ = {l1, l2, l3};
  return z;
}

LengthThreeScheme LengthThreeScheme::double_plus_one(const ProjPoint& l1, const ProjPoint& dir,
                                                     const ProjPoint& l2) {
  if (dir == l1)
    throw ContractError("tangent direction of the double point must differ from its support");
  if (l2 == l1) throw ContractError("the reduced point must differ from the double point");
  LengthThreeScheme z;
  z.kind_ = Kind::DoublePlusOne;
  z.points_ = {l1, l2};
  z.direction_ = dir;
  return z;
}

LengthThreeScheme LengthThreeScheme::curvilinear(const std::array<Scalar, 3>& l,
                                                 const std::array<Scalar, 3>& dir,
                                                 const std::array<Scalar, 3>& second) {
  const ProjPoint lp(l);
  const ProjPoint mp(dir);
  if (lp == mp) throw ContractError("jet direction must differ from the supported point");
  // Rescaling l by alpha and dir by beta reparametrizes the arc; the
  // second-order term of the canonical parametrization picks up alpha/beta^2.
  const Scalar alpha = scale_between(l, lp);
  const Scalar beta = scale_between(dir, mp);
  const Scalar fac = alpha * (beta * beta).inverse();
  LengthThreeScheme z;
  z.kind_ = Kind::Curvilinear;
  z.points_ = {lp};
  z.direction_ = mp;
  z.second_ = {second[0] * fac, second[1] * fac, second[2] * fac};
  return z;
}

const ProjPoint& LengthThreeScheme::direction() const {
  if (!direction_) throw std::logic_error("reduced scheme has no tangent direction");
  return *direction_;
}

const std::array<Scalar, 3>& LengthThreeScheme::second_order() const {
  if (kind_ != Kind::Curvilinear)
    throw std::logic_error("second-order jet data exists for curvilinear schemes only");
  return second_;
}

std::vector<Sym2Vector> LengthThreeScheme::span_columns() const {
  switch (kind_) {
    case Kind::Reduced:
      return {veronese_square(points_[0]), veronese_square(points_[1]),
              veronese_square(points_[2])};
    case Kind::DoublePlusOne:
      return {veronese_square(points_[0]),
              linear_product(points_[0].coords(), direction_->coords()),
              veronese_square(points_[1])};
    case Kind::Curvilinear: {
      // 2-jet of the squared arc: l^2, l*m, m^2 + 2*l*n.
      const Sym2Vector mm = veronese_square(*direction_);
      const Sym2Vector ln = linear_product(points_[0].coords(), second_);
      Sym2Vector third;
      for (int i = 0; i < 6; ++i) third[i] = mm[i] + 2 * ln[i];
      return {veronese_square(points_[0]),
              linear_product(points_[0].coords(), direction_->coords()), third};
    }
  }
  throw std::logic_error("unreachable scheme kind");
}

// ---------------------------------------------------------------------------
// Apolarity
// ---------------------------------------------------------------------------

ApolarCheckResult apolar_check(const QuadraticForm& f, const LengthThreeScheme& z) {
  if (!f.smooth()) throw ContractError("apolarity test requires a smooth form");
  const auto cols = z.span_columns();
  Matrix a(6, 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 6; ++i) a.at(i, j) = cols[j][i];
  const auto sol = a.solve(to_vector(sym2_from_gram(f.gram())));
  ApolarCheckResult out;
  out.apolar = sol.has_value();
  if (out.apolar && z.kind() == LengthThreeScheme::Kind::Reduced)
    out.lambda = {{(*sol)[0], (*sol)[1], (*sol)[2]}};
  return out;
}

ApolarDecomposition apolar_decompose(const QuadraticForm& f) {
  if (!f.smooth()) throw ContractError("apolar decomposition requires a smooth form");
  const Diagonalization dz = diagonalize_symmetric(f.gram());
  const Matrix pinv = dz.P.inverse();

  std::vector<ProjPoint> pts;
  std::array<Scalar, 3> lambda;
  for (int i = 0; i < 3; ++i) {
    const auto r = pinv.row(i);
    const ProjPoint p(r[0], r[1], r[2]);
    // Row = c * point; the square of the rescaling folds into the weight.
    const Scalar c = scale_between({r[0], r[1], r[2]}, p);
    lambda[i] = dz.D.at(i, i) * c * c;
    pts.push_back(p);
  }

  ApolarDecomposition out{LengthThreeScheme::reduced(pts[0], pts[1], pts[2]), lambda};
  const Sym2Vector target = sym2_from_gram(f.gram());
  Sym2Vector sum{};
  for (int i = 0; i < 3; ++i) {
    const Sym2Vector sq = veronese_square(pts[i]);
    for (int k = 0; k < 6; ++k) sum[k] += lambda[i] * sq[k];
  }
  if (!(sum == target)) throw std::logic_error("diagonalization reconstruction failed");
  return out;
}

StratumClass stratum_classify(const QuadraticForm& f, const LengthThreeScheme& z) {
  if (!f.smooth()) throw ContractError("stratum classification requires a smooth form");
  const QuadraticForm dual(f.adjugate());
  // A reduced scheme touching the dual conic is never apolar to a smooth
  // form, so it must be reported before the apolarity check would reject it.
  if (z.kind() == LengthThreeScheme::Kind::Reduced) {
    for (const ProjPoint& p : z.points())
      if (dual.evaluate(p).is_zero()) return StratumClass::OutsideTrichotomy;
  }
  if (!apolar_check(f, z).apolar) throw ContractError("scheme is not apolar to the form");
  switch (z.kind()) {
    case LengthThreeScheme::Kind::Reduced:
      return StratumClass::O;
    case LengthThreeScheme::Kind::DoublePlusOne: {
      const bool supported_on_dual = dual.evaluate(z.points()[0]).is_zero();
      const bool on_tangent =
          dual.bilinear(z.points()[0].coords(), z.points()[1].coords()).is_zero();
      if (supported_on_dual && on_tangent) return StratumClass::S2;
      throw ContractError(
          "double-point scheme outside the stratum trichotomy: the double point must lie on "
          "the dual conic with the reduced point on its tangent line");
    }
    case LengthThreeScheme::Kind::Curvilinear: {
      const bool supported_on_dual = dual.evaluate(z.points()[0]).is_zero();
      const bool jet_along_dual =
          dual.bilinear(z.points()[0].coords(), z.direction().coords()).is_zero();
      if (supported_on_dual && jet_along_dual) return StratumClass::C6;
      throw ContractError(
          "curvilinear scheme outside the stratum trichotomy: the support must lie on the "
          "dual conic with the jet along its tangent line");
    }
  }
  throw std::logic_error("unreachable scheme kind");
}

// ---------------------------------------------------------------------------
// Lines in the quotient space
// ---------------------------------------------------------------------------

PlueckerLine::PlueckerLine(std::array<Scalar, 10> coords, Matrix basis)
    : coords_(std::move(coords)), basis_(std::move(basis)) {
  bool nonzero = false;
  for (const Scalar& c : coords_)
    if (!c.is_zero()) nonzero = true;
  if (!nonzero) throw ContractError("line coordinates must not vanish identically");
  if (basis_.rows() != 5 || basis_.cols() != 6)
    throw ContractError("quotient basis must be a 5x6 matrix");
  if (basis_.rank() != 5) throw ContractError("quotient basis must have rank 5");

  // Signed coordinate lookup and the five quadratic consistency relations,
  // one per omitted index.
  const auto c = [this](int i, int j) -> Scalar {
    if (i == j) return Scalar(0);
    if (i < j) return coords_[pair_index(i, j)];
    return -coords_[pair_index(j, i)];
  };
  for (int omit = 0; omit < 5; ++omit) {
    std::array<int, 4> q{};
    int n = 0;
    for (int i = 0; i < 5; ++i)
      if (i != omit) q[n++] = i;
    const Scalar rel = c(q[0], q[1]) * c(q[2], q[3]) - c(q[0], q[2]) * c(q[1], q[3]) +
                       c(q[0], q[3]) * c(q[1], q[2]);
    if (!rel.is_zero())
      throw ContractError("line coordinates fail the quadratic consistency relations");
  }

  std::vector<Scalar> tmp(coords_.begin(), coords_.end());
  normalize_projective(tmp);
  for (int i = 0; i < 10; ++i) coords_[i] = tmp[i];
}

const std::array<std::pair<int, int>, 10>& PlueckerLine::index_pairs() { return kIndexPairs; }

std::string PlueckerLine::basis_id() const {
  auto ker = basis_.kernel_basis();
  if (ker.size() != 1) throw std::logic_error("quotient basis kernel must be a line");
  normalize_projective(ker[0]);
  std::ostringstream os;
  os << "annihilates:";
  for (size_t i = 0; i < ker[0].size(); ++i) {
    if (i) os << ",";
    os << ker[0][i].str();
  }
  return os.str();
}

Matrix quotient_basis_for(const QuadraticForm& f) {
  const Sym2Vector fv = sym2_from_gram(f.gram());
  Matrix row(1, 6);
  for (int i = 0; i < 6; ++i) row.at(0, i) = fv[i];
  return Matrix::from_rows(row.kernel_basis());
}

Matrix quotient_basis_from_id(const std::string& id) {
  const std::string prefix = "annihilates:";
  if (id.rfind(prefix, 0) != 0)
    throw ContractError("unrecognized quotient basis identifier: " + id);
  std::vector<Scalar> coords;
  std::string rest = id.substr(prefix.size());
  size_t pos = 0;
  while (pos <= rest.size()) {
    const size_t comma = rest.find(',', pos);
    const std::string piece =
        comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
    coords.push_back(parse_scalar(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (coords.size() != 6)
    throw ContractError("quotient basis identifier must carry six coordinates");
  Matrix row(1, 6);
  for (int i = 0; i < 6; ++i) row.at(0, i) = coords[i];
  if (row.is_zero()) throw ContractError("quotient basis identifier must be nonzero");
  return Matrix::from_rows(row.kernel_basis());
}

PlueckerLine trisecant_line(const QuadraticForm& f, const LengthThreeScheme& z) {
  if (z.kind() != LengthThreeScheme::Kind::Reduced)
    throw ContractError("trisecant construction requires a reduced scheme");
  if (!apolar_check(f, z).apolar)
    throw ContractError("scheme is not apolar to the form; projected images are not collinear");

  const Matrix basis = quotient_basis_for(f);
  std::vector<std::vector<Scalar>> img;
  for (const ProjPoint& p : z.points()) img.push_back(basis.apply(to_vector(veronese_square(p))));
  if (Matrix::from_rows(img).rank() != 2)
    throw std::logic_error("projected images of an apolar reduced scheme must span a line");

  // Wedge the first two projectively independent images.
  for (const auto& [i, j] : std::array<std::pair<int, int>, 3>{{{0, 1}, {0, 2}, {1, 2}}}) {
    std::array<Scalar, 10> coords;
    bool nonzero = false;
    for (int k = 0; k < 10; ++k) {
      const auto [r, s] = kIndexPairs[k];
      coords[k] = img[i][r] * img[j][s] - img[i][s] * img[j][r];
      if (!coords[k].is_zero()) nonzero = true;
    }
    if (nonzero) return PlueckerLine(coords, basis);
  }
  throw std::logic_error("rank-2 image set with no independent pair");
}

PullbackResult veronese_pullback(const QuadraticForm& f, const PlueckerLine& line) {
  const Sym2Vector fv = sym2_from_gram(f.gram());
  if (!all_zero(line.basis().apply(to_vector(fv))))
    throw ContractError("line does not live in the quotient defined by this form");

  // Two spanning points of the line from the antisymmetric coordinate matrix.
  Matrix omega(5, 5);
  for (int k = 0; k < 10; ++k) {
    const auto [i, j] = kIndexPairs[k];
    omega.at(i, j) = line.coords()[k];
    omega.at(j, i) = -line.coords()[k];
  }
  std::vector<std::vector<Scalar>> span;
  for (int j = 0; j < 5 && span.size() < 2; ++j) {
    auto col = omega.col(j);
    if (all_zero(col)) continue;
    if (span.empty()) {
      span.push_back(col);
      continue;
    }
    std::vector<std::vector<Scalar>> pair{span[0], col};
    if (Matrix::from_rows(pair).rank() == 2) span.push_back(col);
  }
  if (span.size() != 2) throw std::logic_error("line coordinates are not decomposable");

  // Lift both spanning points through the quotient and cut the plane they
  // span together with the form.
  std::vector<std::vector<Scalar>> plane_rows{to_vector(fv)};
  for (const auto& v : span) {
    const auto lift = line.basis().solve(v);
    if (!lift) throw std::logic_error("surjective quotient failed to lift a point");
    plane_rows.push_back(*lift);
  }
  const Matrix plane = Matrix::from_rows(plane_rows);
  if (plane.rank() != 3)
    throw std::logic_error("plane spanned by the form and the lifted line is degenerate");

  PullbackResult out;
  std::vector<TernaryForm> generators;
  for (const auto& v : plane.kernel_basis()) {
    // The kernel vector holds a linear functional on the space of symmetric
    // squares; composing with the Veronese map doubles the mixed monomials.
    // The resulting conic is stored projectively normalized.
    std::vector<Scalar> coeff{v[0], v[1], v[2], Scalar(2) * v[3], Scalar(2) * v[4],
                              Scalar(2) * v[5]};
    normalize_projective(coeff);
    Sym2Vector s;
    for (int i = 0; i < 6; ++i) s[i] = coeff[i];
    out.conics.emplace_back(gram_from_sym2(s));
    generators.push_back(TernaryForm::quadratic_from_gram(out.conics.back().gram()));
  }
  out.length = scheme_length_from_forms(generators, 3);
  return out;
}

// ---------------------------------------------------------------------------
// Special lines and cylinders
// ---------------------------------------------------------------------------

bool is_special_line(const QuadraticForm& f, const ProjPoint& x) {
  if (!f.smooth()) throw ContractError("special-line test requires a smooth form");
  return QuadraticForm(f.adjugate()).evaluate(x).is_zero();
}

ProjLine incidence_locus(const QuadraticForm& f, const ProjPoint& x) {
  if (!f.smooth()) throw ContractError("incidence locus requires a smooth form");
  return polar_line(QuadraticForm(f.adjugate()), x);
}

CylinderReport decide_cylinders(const QuadraticForm& f) {
  if (!f.smooth()) throw ContractError("cylinder decision requires a smooth form");
  CylinderReport rep;
  rep.a2 = true;
  rep.a2_citation =
      "Every form of the quintic del Pezzo threefold over a field of characteristic zero "
      "contains a Zariski-open cylinder over the affine plane.";
  rep.a3_citation =
      "A form of the quintic del Pezzo threefold contains a cylinder over affine 3-space if "
      "and only if it carries a special line over the base field, equivalently if and only "
      "if the associated conic has a rational point.";

  if (f.field() != FieldKind::Rational) {
    rep.a3 = CylinderReport::A3::Unsupported;
    rep.note =
        "unsupported decision: the rational-point test behind the affine 3-space criterion "
        "is implemented over the rationals only";
    return rep;
  }

  const PointCertificate cert = has_rational_point(f);
  rep.certificate = cert;
  if (!cert.solvable) {
    rep.a3 = CylinderReport::A3::False;
    return rep;
  }
  rep.a3 = CylinderReport::A3::True;
  // The tangent line at the conic point, read as a point of the dual plane,
  // lies on the dual conic; that dual point labels a special line.
  const auto tangent =
      f.gram().apply({(*cert.witness)[0], (*cert.witness)[1], (*cert.witness)[2]});
  const ProjPoint special(tangent[0], tangent[1], tangent[2]);
  if (!QuadraticForm(f.adjugate()).evaluate(special).is_zero())
    throw std::logic_error("tangent witness fails the dual conic equation");
  rep.special_line = special;
  return rep;
}

ProjPoint hilbert_rational_point(const QuadraticForm& f) {
  if (f.field() != FieldKind::Rational)
    throw ContractError("the rational-point construction requires a form over the rationals");
  if (!f.smooth()) throw ContractError("the rational-point construction requires a smooth form");
  const QuadraticForm dual(f.adjugate());

  {
    const PointCertificate cert = has_rational_point(dual);
    if (cert.solvable) return *cert.witness;
  }

  // No rational point on the dual conic: adjoin a square root.  Diagonalize,
  // clear denominators, and look for the first small d such that twisting
  // one coordinate by d makes the diagonal form solvable with a small
  // witness.
  const Diagonalization dz = diagonalize_symmetric(dual.gram());
  Integer l = 1;
  for (int i = 0; i < 3; ++i) l = lcm(l, dz.D.at(i, i).rational().get_den());
  std::array<Integer, 3> c;
  for (int i = 0; i < 3; ++i) {
    const Rational r = dz.D.at(i, i).rational();
    c[i] = r.get_num() * (l / r.get_den());
  }

  std::vector<long> candidates{-1};
  for (long n = 2; n <= 50; ++n) {
    if (!is_squarefree(n)) continue;
    candidates.push_back(n);
    candidates.push_back(-n);
  }

  const Integer cap = 1000;
  for (const long d : candidates) {
    for (int i = 0; i < 3; ++i) {
      std::array<Integer, 3> modified = c;
      modified[i] *= d;
      const auto w = detail::solve_diagonal_capped(modified, cap);
      if (!w) continue;
      if ((*w)[i] == 0)
        throw std::logic_error("capped search returned a point that descends to the base field");
      std::array<Scalar, 3> v;
      for (int j = 0; j < 3; ++j) v[j] = Scalar(Rational((*w)[j]));
      v[i] *= Scalar::sqrt_of(d);
      const auto mapped = dz.P.apply({v[0], v[1], v[2]});
      const ProjPoint p(mapped[0], mapped[1], mapped[2]);
      if (!dual.evaluate(p).is_zero())
        throw std::logic_error("quadratic-extension point fails the dual conic equation");
      return descend_rational_point(dual, p);
    }
  }
  throw ContractError(
      "no quadratic-extension point with small coordinates found for square roots up to 50");
}

}  // namespace v5
