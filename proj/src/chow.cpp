#include "v5/chow.hpp"

#include <sstream>

#include "v5/error.hpp"

namespace v5 {

ChowClass ChowClass::xi(long c1, long c2) {
  ChowClass c(c1, c2);
  c.add_term(1, 0, 1);
  return c;
}

ChowClass ChowClass::hyperplane(long c1, long c2) {
  ChowClass c(c1, c2);
  c.add_term(0, 1, 1);
  return c;
}

int ChowClass::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    if (m.first + m.second > d) d = m.first + m.second;
  return d;
}

bool ChowClass::is_homogeneous_of(int d) const {
  for (const auto& [m, c] : terms_)
    if (m.first + m.second != d) return false;
  return true;
}

Rational ChowClass::coeff(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void ChowClass::add_term(int i, int j, const Rational& c) {
  if (c == 0) return;
  if (j >= 3) return;  // A^3 = 0
  if (i >= 2) {
    // xi^2 = c1*xi*A - c2*A^2, applied to the top of the monomial.
    add_term(i - 1, j + 1, Rational(c1_) * c);
    add_term(i - 2, j + 2, Rational(-c2_) * c);
    return;
  }
  auto& slot = terms_[{i, j}];
  slot += c;
  if (slot == 0) terms_.erase({i, j});
}

void ChowClass::require_same_context(const ChowClass& o) const {
  if (c1_ != o.c1_ || c2_ != o.c2_)
    throw ContractError("intersection classes from different bundle contexts");
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
  require_same_context(o);
  ChowClass out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m.first, m.second, c);
  return out;
}

ChowClass ChowClass::operator-(const ChowClass& o) const { return *this + (-o); }

ChowClass ChowClass::operator-() const { return scaled(-1); }

ChowClass ChowClass::operator*(const ChowClass& o) const {
  require_same_context(o);
  ChowClass out(c1_, c2_);
  for (const auto& [m, c] : terms_)
    for (const auto& [n, d] : o.terms_)
      out.add_term(m.first + n.first, m.second + n.second, Rational(c * d));
  return out;
}

ChowClass ChowClass::scaled(const Rational& c) const {
  ChowClass out(c1_, c2_);
  for (const auto& [m, k] : terms_) out.add_term(m.first, m.second, Rational(k * c));
  return out;
}

bool ChowClass::operator==(const ChowClass& o) const {
  return c1_ == o.c1_ && c2_ == o.c2_ && terms_ == o.terms_;
}

Rational ChowClass::integral() const {
  if (!is_homogeneous_of(3)) throw ContractError("integral requires a degree-3 class");
  return coeff(1, 2);
}

std::string ChowClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(c);
    if (m.first > 0) os << "*xi" << (m.first > 1 ? "^" + std::to_string(m.first) : "");
    if (m.second > 0) os << "*A" << (m.second > 1 ? "^" + std::to_string(m.second) : "");
  }
  return os.str();
}

Rational pbundle_intersection(long c1, long c2, const std::array<ChowClass, 3>& classes) {
  for (const ChowClass& c : classes) {
    if (c.c1() != c1 || c.c2() != c2)
      throw ContractError("intersection classes from different bundle contexts");
    if (!c.is_homogeneous_of(1))
      throw ContractError("triple intersection requires degree-1 classes");
  }
  return (classes[0] * classes[1] * classes[2]).integral();
}

SarkisovReport sarkisov_numerology() {
  const long c1 = -1, c2 = 3;
  const ChowClass xi = ChowClass::xi(c1, c2);
  const ChowClass a = ChowClass::hyperplane(c1, c2);
  const ChowClass k = xi.scaled(-2) + a.scaled(-4);
  const ChowClass g = xi + a;

  SarkisovReport rep;
  rep.k3 = (k * k * k).integral();
  rep.k2g = (k * k * g).integral();
  rep.kg2 = (k * g * g).integral();
  rep.g3 = (g * g * g).integral();
  // Across the flop the cube of the contracted surface is evaluated on the
  // plane with normal sheaf of degree -1: the integral of c1(N)^2 is 1.
  rep.gplus3 = 1;
  rep.ky3 = rep.k3 - 6 * rep.k2g + 12 * rep.kg2 - 8 * rep.gplus3;
  rep.h3 = rep.ky3 / Rational(-8);
  return rep;
}

namespace {

using Vec2 = std::array<long, 2>;

Vec2 add2(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
Vec2 scale2(long c, const Vec2& a) { return {c * a[0], c * a[1]}; }

std::string vec2_str(const Vec2& a) {
  std::ostringstream os;
  bool wrote = false;
  if (a[0] != 0) {
    if (a[0] == 1)
      os << "q*H";
    else if (a[0] == -1)
      os << "-q*H";
    else
      os << a[0] << "*q*H";
    wrote = true;
  }
  if (a[1] != 0) {
    if (wrote) os << (a[1] > 0 ? " + " : " - ");
    const long m = wrote ? std::abs(a[1]) : a[1];
    if (m == 1)
      os << "E";
    else if (m == -1)
      os << "-E";
    else
      os << m << "*E";
    wrote = true;
  }
  if (!wrote) os << "0";
  return os.str();
}

}  // namespace

QuadricLinkReport quadric_link_divisors() {
  // Lattice with basis (q*H, E) on the blow-up of the threefold along a
  // line; q' is the second contraction, onto a quadric.
  const Vec2 qh{1, 0};
  const Vec2 e{0, 1};

  // Fixed link data: the second contraction's hyperplane system is
  // |H - line|, the canonical class gains E under the blow-up, and the
  // quadric's anticanonical class is three hyperplanes.
  const Vec2 qprime_o1 = add2(qh, scale2(-1, e));         // q'* O(1) = q*H - E
  const Vec2 k_tilde = add2(scale2(-2, qh), e);           // q* K_Y + E with K_Y = -2H
  const Vec2 qprime_kq = scale2(-3, qprime_o1);           // q'* K_Q = -3 q'* O(1)
  const Vec2 z_prime = add2(k_tilde, scale2(-1, qprime_kq));
  const Vec2 qprime_q0 = qprime_o1;                       // Q0 is a hyperplane section
  const Vec2 q0_prime = add2(qprime_q0, scale2(-1, z_prime));

  QuadricLinkReport rep;
  rep.z_prime = z_prime;
  rep.q0_prime = q0_prime;
  rep.pushforward_h = z_prime[0];  // pushforward kills E and fixes q*H

  const Vec2 minus_ky{2, 0};
  rep.identities.push_back(
      {"Z' = q*H - 2E", vec2_str(z_prime), vec2_str(add2(qh, scale2(-2, e))),
       z_prime == add2(qh, scale2(-2, e))});
  rep.identities.push_back({"q_* Z' = H", std::to_string(rep.pushforward_h) + "*H", "H",
                            rep.pushforward_h == 1});
  rep.identities.push_back({"-K_Y = 2 q_* Z'", vec2_str(minus_ky),
                            vec2_str(scale2(2 * rep.pushforward_h, qh)),
                            minus_ky == scale2(2 * rep.pushforward_h, qh)});
  rep.identities.push_back(
      {"Q0' = E", vec2_str(q0_prime), vec2_str(e), q0_prime == e});

  rep.all_hold = true;
  for (const LatticeIdentity& id : rep.identities)
    if (!id.holds) rep.all_hold = false;
  return rep;
}

}  // namespace v5
