#include "v5/involution.hpp"

#include <sstream>

#include "v5/error.hpp"
#include "v5/matrix.hpp"

namespace v5 {

namespace {

bool collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  const Matrix m = Matrix::from_rows({{p1[0], p1[1], p1[2]},
                                      {p2[0], p2[1], p2[2]},
                                      {p3[0], p3[1], p3[2]}});
  return m.determinant().is_zero();
}

using Vec4 = std::array<long, 4>;

Vec4 add(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Vec4 scale(long c, const Vec4& a) { return {c * a[0], c * a[1], c * a[2], c * a[3]}; }

// Intersection pairing of the blow-up lattice: diag(1, -1, -1, -1).
long pair4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

std::string vec_str(const Vec4& a) {
  std::ostringstream os;
  os << "(" << a[0] << ", " << a[1] << ", " << a[2] << ", " << a[3] << ")";
  return os.str();
}

LatticeIdentity vec_identity(const std::string& name, const Vec4& lhs, const Vec4& rhs) {
  return {name, vec_str(lhs), vec_str(rhs), lhs == rhs};
}

LatticeIdentity num_identity(const std::string& name, long lhs, long rhs) {
  return {name, std::to_string(lhs), std::to_string(rhs), lhs == rhs};
}

}  // namespace

InvolutionType classify_base_scheme(const InvolutionBaseScheme& z) {
  if (z.net) {
    for (const TernaryForm& g : *z.net)
      if (g.is_zero() || !g.is_homogeneous() || g.degree() != 2)
        throw ContractError("net generators must be conics");
    const int len3 = scheme_length_from_forms(*z.net, 3);
    const int len4 = scheme_length_from_forms(*z.net, 4);
    if (len3 != 3 || len4 != 3)
      throw ContractError("net does not cut out a scheme of length 3");
  }
  switch (z.scheme.kind()) {
    case LengthThreeScheme::Kind::Reduced: {
      const auto& p = z.scheme.points();
      if (collinear(p[0], p[1], p[2]))
        throw ContractError("not a quadratic-involution base scheme: the three points are collinear");
      return InvolutionType::I;
    }
    case LengthThreeScheme::Kind::DoublePlusOne:
      return InvolutionType::II;
    case LengthThreeScheme::Kind::Curvilinear:
      return InvolutionType::III;
  }
  throw std::logic_error("unreachable scheme kind");
}

TypeIReport typeI_lattice_verify(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  if (collinear(p1, p2, p3))
    throw ContractError("not a quadratic-involution base scheme: the three points are collinear");

  // Basis (H, e1, e2, e3) of the blow-up lattice; the identities below are
  // lattice constants once the centers are honestly three distinct points.
  const Vec4 h{1, 0, 0, 0};
  const std::array<Vec4, 3> ei{{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  const Vec4 e = add(ei[0], add(ei[1], ei[2]));
  // e'_i: strict transform of the line through the other two points.
  std::array<Vec4, 3> eprime_i;
  for (int i = 0; i < 3; ++i)
    eprime_i[i] = add(h, add(scale(-1, ei[(i + 1) % 3]), scale(-1, ei[(i + 2) % 3])));
  const Vec4 eprime = add(eprime_i[0], add(eprime_i[1], eprime_i[2]));
  const Vec4 k = add(scale(-3, h), e);

  TypeIReport rep;
  rep.e = e;
  rep.e_prime = eprime;
  rep.canonical = k;
  rep.identities.push_back(vec_identity("K = -(e + e')", k, scale(-1, add(e, eprime))));
  rep.identities.push_back(vec_identity("2e + e' = 3H", add(scale(2, e), eprime), scale(3, h)));
  rep.identities.push_back(
      vec_identity("e + 2e' = 3(2H - e)", add(e, scale(2, eprime)),
                   scale(3, add(scale(2, h), scale(-1, e)))));
  for (int i = 0; i < 3; ++i)
    rep.identities.push_back(num_identity("(e'_" + std::to_string(i + 1) + ")^2 = -1",
                                          pair4(eprime_i[i], eprime_i[i]), -1));
  rep.identities.push_back(num_identity("K^2 = 6", pair4(k, k), 6));
  rep.identities.push_back(num_identity("e.e' = 6", pair4(e, eprime), 6));

  rep.all_hold = true;
  for (const LatticeIdentity& id : rep.identities)
    if (!id.holds) rep.all_hold = false;
  return rep;
}

}  // namespace v5
