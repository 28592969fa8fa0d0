#include "v5/projective.hpp"

#include "v5/error.hpp"

namespace v5 {

namespace detail {

namespace {

// Primitive integer vector with positive first nonzero entry.
void normalize_rational(std::array<Scalar, 3>& c) {
  Integer l = 1;
  for (const Scalar& x : c) l = lcm(l, x.rational().get_den());
  Integer g = 0;
  std::array<Integer, 3> v;
  for (int i = 0; i < 3; ++i) {
    Rational q = c[i].rational() * Rational(l);
    v[i] = q.get_num();
    g = gcd(g, v[i]);
  }
  int first = 0;
  while (sgn(v[first]) == 0) ++first;
  if (sgn(v[first]) < 0) g = -g;
  for (int i = 0; i < 3; ++i) c[i] = Scalar(Rational(v[i] / g));
}

}  // namespace

HomVec3::HomVec3(Scalar x, Scalar y, Scalar z) : c_{std::move(x), std::move(y), std::move(z)} {
  int first = -1;
  for (int i = 0; i < 3 && first < 0; ++i)
    if (!c_[i].is_zero()) first = i;
  if (first < 0) throw ContractError("projective coordinates must not all vanish");
  if (!is_rational()) {
    // May collapse to a rational triple, e.g. (√2, 0, 3√2); re-check below.
    const Scalar inv = c_[first].inverse();
    for (int i = 0; i < 3; ++i) c_[i] *= inv;
  }
  if (is_rational()) normalize_rational(c_);
}

const Scalar& HomVec3::operator[](int i) const {
  if (i < 0 || i > 2) throw ContractError("coordinate index out of range");
  return c_[i];
}

bool HomVec3::is_rational() const {
  for (const Scalar& x : c_)
    if (x.kind() != FieldKind::Rational) return false;
  return true;
}

std::string HomVec3::str() const {
  return "[" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + "]";
}

}  // namespace detail

ProjPoint ProjPoint::conj() const { return ProjPoint(c_[0].conj(), c_[1].conj(), c_[2].conj()); }

ProjLine ProjLine::conj() const { return ProjLine(c_[0].conj(), c_[1].conj(), c_[2].conj()); }

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ProjLine join_points(const ProjPoint& a, const ProjPoint& b) {
  auto c = cross(a.coords(), b.coords());
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
    throw ContractError("no unique line through coincident points");
  return ProjLine(c[0], c[1], c[2]);
}

ProjPoint meet_lines(const ProjLine& a, const ProjLine& b) {
  auto c = cross(a.coords(), b.coords());
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
    throw ContractError("no unique intersection of coincident lines");
  return ProjPoint(c[0], c[1], c[2]);
}

Scalar incidence(const ProjLine& l, const ProjPoint& p) {
  return l[0] * p[0] + l[1] * p[1] + l[2] * p[2];
}

}  // namespace v5
