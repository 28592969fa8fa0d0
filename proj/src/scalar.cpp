#include "v5/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <utility>
#include <vector>

#include "v5/error.hpp"

namespace v5 {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ContractError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {
constexpr long kTrialLimit = 1000000;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) throw ContractError("squarefree test is undefined for zero");
  Integer m = abs(n);
  for (long p = 2; p <= kTrialLimit; ++p) {
    if (Integer(p) * p > m) return true;  // remaining m is 1 or a single prime
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
    }
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) return false;
  // Every prime factor of m now exceeds the trial bound, so below its cube m
  // has at most two of them; the square case was just excluded.
  const Integer cube = Integer(kTrialLimit) * kTrialLimit * kTrialLimit;
  if (m < cube) return true;
  throw ContractError("cannot certify the squarefree part of " + n.get_str());
}

// ---------------------------------------------------------------------------
// Poly2
// ---------------------------------------------------------------------------

Poly2::Poly2(const Rational& c) {
  if (sgn(c) != 0) terms_[{0, 0}] = c;
}

Poly2 Poly2::var_s() {
  Poly2 p;
  p.terms_[{1, 0}] = 1;
  return p;
}

Poly2 Poly2::var_t() {
  Poly2 p;
  p.terms_[{0, 1}] = 1;
  return p;
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::array<int, 2>{0, 0});
}

Rational Poly2::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw ContractError("polynomial is not constant");
  return terms_.begin()->second;
}

int Poly2::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& key = terms_.rbegin()->first;
  return key[0] + key[1];
}

int Poly2::degree_in_t() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key[1]);
  return d;
}

Rational Poly2::leading_coeff() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->second;
}

void Poly2::set_coeff(int s_exp, int t_exp, const Rational& c) {
  if (s_exp < 0 || t_exp < 0) throw ContractError("negative exponent");
  if (sgn(c) == 0)
    terms_.erase({s_exp, t_exp});
  else
    terms_[{s_exp, t_exp}] = c;
}

Rational Poly2::coeff(int s_exp, int t_exp) const {
  auto it = terms_.find({s_exp, t_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 out = *this;
  for (const auto& [key, c] : o.terms_) {
    Rational sum = out.coeff(key[0], key[1]) + c;
    out.set_coeff(key[0], key[1], sum);
  }
  return out;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator-() const {
  Poly2 out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      const std::array<int, 2> k{ka[0] + kb[0], ka[1] + kb[1]};
      Rational sum = out.coeff(k[0], k[1]) + ca * cb;
      out.set_coeff(k[0], k[1], sum);
    }
  return out;
}

std::optional<Poly2> Poly2::divide_exact(const Poly2& divisor) const {
  if (divisor.is_zero()) throw ContractError("division by the zero polynomial");
  Poly2 q;
  Poly2 r = *this;
  const auto d_lt = *divisor.terms_.rbegin();
  while (!r.is_zero()) {
    const auto r_lt = *r.terms_.rbegin();
    const int ds = r_lt.first[0] - d_lt.first[0];
    const int dt = r_lt.first[1] - d_lt.first[1];
    // If r were a multiple, its graded-lex leading term would be divisible.
    if (ds < 0 || dt < 0) return std::nullopt;
    Poly2 mono;
    mono.set_coeff(ds, dt, r_lt.second / d_lt.second);
    q += mono;
    r -= mono * divisor;
  }
  return q;
}

Poly2 Poly2::scaled(const Rational& c) const {
  Poly2 out;
  if (sgn(c) == 0) return out;
  out.terms_ = terms_;
  for (auto& [key, v] : out.terms_) v *= c;
  return out;
}

Rational Poly2::evaluate(const Rational& s, const Rational& t) const {
  Rational acc = 0;
  for (const auto& [key, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < key[0]; ++i) term *= s;
    for (int i = 0; i < key[1]; ++i) term *= t;
    acc += term;
  }
  return acc;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool neg = sgn(it->second) < 0;
    const Rational mag = abs(it->second);
    const int si = it->first[0], ti = it->first[1];
    std::vector<std::string> factors;
    if ((si == 0 && ti == 0) || mag != 1) factors.push_back(rational_str(mag));
    if (si == 1) factors.push_back("s");
    if (si > 1) factors.push_back("s^" + std::to_string(si));
    if (ti == 1) factors.push_back("t");
    if (ti > 1) factors.push_back("t^" + std::to_string(ti));
    std::string term;
    for (std::size_t i = 0; i < factors.size(); ++i) term += (i ? "*" : "") + factors[i];
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// GCD in Q[s,t]: s-content / primitive part, then a primitive PRS in t.  All
// remainder-sequence arithmetic runs over integer coefficients: denominators
// are cleared once at the boundary and every intermediate stays primitive,
// because rational-coefficient Euclid and untrimmed pseudo-division both grow
// coefficient bit-length exponentially in the degree.
// ---------------------------------------------------------------------------

namespace {

Poly2 monic(Poly2 p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading_coeff());
}

// Dense integer polynomial in s, index = degree, trimmed (empty = zero).
using ZPoly = std::vector<Integer>;
// Bivariate layer: index = t-degree, entry = s-coefficient polynomial.
using ZBPoly = std::vector<ZPoly>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void zmake_primitive(ZPoly& p) {
  Integer c = 0;
  for (const Integer& x : p) c = gcd(c, x);
  if (c > 1)
    for (Integer& x : p) x /= c;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact quotient; the caller guarantees divisibility in Z[s].
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
  if (a.empty()) return {};
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer c = a[k + b.size() - 1];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), b.back().get_mpz_t()))
      throw ContractError("internal error: inexact polynomial division");
    q[k] = c / b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  return q;
}

// Pseudo-remainder over Z[s] with multipliers trimmed by the leading gcd.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::size_t da = a.size() - 1;
    const Integer g = gcd(a.back(), b.back());
    const Integer ma = b.back() / g;
    const Integer mb = a.back() / g;
    for (Integer& c : a) c *= ma;
    for (std::size_t i = 0; i <= db; ++i) a[da - db + i] -= mb * b[i];
    ztrim(a);
    if (a.empty()) break;
  }
  return a;
}

// Primitive gcd over Z[s] via a primitive remainder sequence.
ZPoly zgcd_s(ZPoly x, ZPoly y) {
  if (x.empty()) {
    zmake_primitive(y);
    return y;
  }
  if (y.empty()) {
    zmake_primitive(x);
    return x;
  }
  zmake_primitive(x);
  zmake_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return {Integer(1)};
    ZPoly r = zprem(x, y);
    zmake_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

void zbtrim(ZBPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

ZBPoly zb_from_poly2(const Poly2& p) {
  Integer den = 1;
  for (const auto& [key, c] : p.terms()) den = lcm(den, c.get_den());
  ZBPoly out(p.degree_in_t() + 1);
  for (const auto& [key, c] : p.terms()) {
    ZPoly& row = out[key[1]];
    if (static_cast<int>(row.size()) <= key[0]) row.resize(key[0] + 1, Integer(0));
    row[key[0]] = c.get_num() * (den / c.get_den());
  }
  for (ZPoly& row : out) ztrim(row);
  zbtrim(out);
  return out;
}

// Gcd over Z[s] of the t-coefficients; primitive, empty for the zero input.
ZPoly zb_content_s(const ZBPoly& p) {
  ZPoly g;
  for (const ZPoly& row : p) {
    if (row.empty()) continue;
    g = zgcd_s(g, row);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

// Divide out the s-content polynomial and the integer content.
void zb_make_primitive(ZBPoly& p) {
  if (p.empty()) return;
  const ZPoly c = zb_content_s(p);
  if (c.size() > 1)
    for (ZPoly& row : p)
      if (!row.empty()) row = zdiv_exact(row, c);
  Integer ic = 0;
  for (const ZPoly& row : p)
    for (const Integer& x : row) ic = gcd(ic, x);
  if (ic > 1)
    for (ZPoly& row : p)
      for (Integer& x : row) x /= ic;
}

// Pseudo-remainder in t over Z[s]: the t-degree drops every step, the
// multipliers are trimmed by the gcd of the leading coefficients, and the
// result is kept fully primitive.
ZBPoly zb_prem_t(ZBPoly a, const ZBPoly& b) {
  const std::size_t db = b.size() - 1;
  const ZPoly& lcb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t da = a.size() - 1;
    const ZPoly g = zgcd_s(a.back(), lcb);
    const ZPoly ma = zdiv_exact(lcb, g);
    const ZPoly mb = zdiv_exact(a.back(), g);
    for (ZPoly& row : a) row = zmul(row, ma);
    for (std::size_t j = 0; j <= db; ++j) {
      const ZPoly sub = zmul(mb, b[j]);
      ZPoly& row = a[da - db + j];
      if (row.size() < sub.size()) row.resize(sub.size(), Integer(0));
      for (std::size_t i = 0; i < sub.size(); ++i) row[i] -= sub[i];
      ztrim(row);
    }
    zbtrim(a);
    zb_make_primitive(a);
  }
  return a;
}

ZBPoly zb_scale(const ZBPoly& p, const ZPoly& m) {
  ZBPoly out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[j] = zmul(p[j], m);
  return out;
}

Integer zeval(const ZPoly& p, long v) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * v + p[i];
  return acc;
}

// Specialize s = v, giving a univariate integer polynomial in t.
ZPoly zb_eval_at_s(const ZBPoly& p, long v) {
  ZPoly out(p.size(), Integer(0));
  for (std::size_t j = 0; j < p.size(); ++j) out[j] = zeval(p[j], v);
  ztrim(out);
  return out;
}

// Monic Poly2 from integer coefficients, scaled by the graded-lex leader.
Poly2 poly2_monic_from_zb(const ZBPoly& p) {
  Poly2 out;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i)
      if (p[j][i] != 0)
        out.set_coeff(static_cast<int>(i), static_cast<int>(j), Rational(p[j][i]));
  return monic(out);
}

}  // namespace

Poly2 poly2_gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly2(Rational(1));
  ZBPoly x = zb_from_poly2(a);
  ZBPoly y = zb_from_poly2(b);
  if (x.size() < y.size()) std::swap(x, y);
  // A polynomial in s alone shares only s-content with the other argument.
  if (y.size() == 1) {
    const ZPoly g = zgcd_s(y[0], x.size() == 1 ? x[0] : zb_content_s(x));
    return poly2_monic_from_zb(ZBPoly{g});
  }
  const ZPoly cont = zgcd_s(zb_content_s(x), zb_content_s(y));
  zb_make_primitive(x);
  zb_make_primitive(y);
  // Coprimality shortcut: specialize s at a point where neither leading
  // t-coefficient vanishes.  Every common divisor with positive t-degree
  // survives such a specialization with its t-degree intact, so a constant
  // univariate gcd proves the primitive parts coprime.  Elimination
  // workloads hit this case almost always, skipping the remainder sequence.
  for (long v = 1; v <= 5; ++v) {
    if (zeval(x.back(), v) == 0 || zeval(y.back(), v) == 0) continue;
    const ZPoly g = zgcd_s(zb_eval_at_s(x, v), zb_eval_at_s(y, v));
    if (g.size() == 1) return poly2_monic_from_zb(ZBPoly{cont});
    // A nontrivial specialized gcd proves nothing (the point may be
    // unlucky), so keep scanning before paying for the remainder sequence.
  }
  while (true) {
    ZBPoly r = zb_prem_t(x, y);
    if (r.empty()) break;
    if (r.size() == 1) {
      y = ZBPoly{{Integer(1)}};  // primitive parts are coprime in Q(s)[t]
      break;
    }
    x = std::move(y);
    y = std::move(r);
  }
  return poly2_monic_from_zb(zb_scale(y, cont));
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar Scalar::quad_collapse(const Rational& a, const Rational& b, long d) {
  if (sgn(b) == 0) return Scalar(a);
  return Scalar(std::variant<Rational, QuadElem, RatFunc>(QuadElem{a, b, d}));
}

Scalar Scalar::func_collapse(const Poly2& num, const Poly2& den) {
  if (den.is_zero()) throw ContractError("zero denominator");
  if (num.is_zero()) return Scalar(Rational(0));
  if (den.is_constant()) {
    const Poly2 n = num.scaled(Rational(1) / den.constant_value());
    if (n.is_constant()) return Scalar(n.constant_value());
    return Scalar(std::variant<Rational, QuadElem, RatFunc>(RatFunc{n, Poly2(Rational(1))}));
  }
  Poly2 n = num, m = den;
  const Poly2 g = poly2_gcd(n, m);
  if (!g.is_constant()) {
    n = *n.divide_exact(g);
    m = *m.divide_exact(g);
  }
  const Rational lc = m.leading_coeff();
  n = n.scaled(Rational(1) / lc);
  m = m.scaled(Rational(1) / lc);
  if (n.is_constant() && m.is_constant()) return Scalar(n.constant_value());
  return Scalar(std::variant<Rational, QuadElem, RatFunc>(RatFunc{n, m}));
}

Scalar Scalar::quadratic(const Rational& a, const Rational& b, long d) {
  if (d == 0 || d == 1 || !is_squarefree(Integer(d)))
    throw ContractError("radicand must be a squarefree integer other than 0 and 1");
  return quad_collapse(a, b, d);
}

Scalar Scalar::function(const Poly2& num, const Poly2& den) { return func_collapse(num, den); }

FieldKind Scalar::kind() const {
  if (std::holds_alternative<Rational>(value_)) return FieldKind::Rational;
  if (std::holds_alternative<QuadElem>(value_)) return FieldKind::Quadratic;
  return FieldKind::Function;
}

bool Scalar::is_zero() const {
  return std::holds_alternative<Rational>(value_) && sgn(std::get<Rational>(value_)) == 0;
}

bool Scalar::is_one() const {
  return std::holds_alternative<Rational>(value_) && std::get<Rational>(value_) == 1;
}

const Rational& Scalar::rational() const {
  if (!std::holds_alternative<Rational>(value_)) throw ContractError("scalar is not rational");
  return std::get<Rational>(value_);
}

const QuadElem& Scalar::quadratic_value() const {
  if (!std::holds_alternative<QuadElem>(value_)) throw ContractError("scalar is not quadratic");
  return std::get<QuadElem>(value_);
}

const RatFunc& Scalar::function_value() const {
  if (!std::holds_alternative<RatFunc>(value_)) throw ContractError("scalar is not a rational function");
  return std::get<RatFunc>(value_);
}

namespace {

struct QuadPair {
  Rational a1, b1, a2, b2;
  long d;
};

// Promote both operands into Q(sqrt d); throws when the radicands differ.
QuadPair as_quad_pair(const Scalar& x, const Scalar& y) {
  QuadPair p;
  const QuadElem* qx = x.kind() == FieldKind::Quadratic ? &x.quadratic_value() : nullptr;
  const QuadElem* qy = y.kind() == FieldKind::Quadratic ? &y.quadratic_value() : nullptr;
  if (qx && qy && qx->d != qy->d)
    throw ContractError("cannot mix sqrt(" + std::to_string(qx->d) + ") and sqrt(" +
                        std::to_string(qy->d) + ") in one scalar");
  p.d = qx ? qx->d : qy->d;
  p.a1 = qx ? qx->a : x.rational();
  p.b1 = qx ? qx->b : Rational(0);
  p.a2 = qy ? qy->a : y.rational();
  p.b2 = qy ? qy->b : Rational(0);
  return p;
}

struct FuncPair {
  Poly2 n1, d1, n2, d2;
};

FuncPair as_func_pair(const Scalar& x, const Scalar& y) {
  FuncPair p;
  if (x.kind() == FieldKind::Function) {
    p.n1 = x.function_value().num;
    p.d1 = x.function_value().den;
  } else {
    p.n1 = Poly2(x.rational());
    p.d1 = Poly2(Rational(1));
  }
  if (y.kind() == FieldKind::Function) {
    p.n2 = y.function_value().num;
    p.d2 = y.function_value().den;
  } else {
    p.n2 = Poly2(y.rational());
    p.d2 = Poly2(Rational(1));
  }
  return p;
}

enum class OpKind { Rational, Quadratic, Function };

OpKind classify(const Scalar& x, const Scalar& y) {
  const FieldKind kx = x.kind(), ky = y.kind();
  if ((kx == FieldKind::Quadratic && ky == FieldKind::Function) ||
      (kx == FieldKind::Function && ky == FieldKind::Quadratic))
    throw ContractError("cannot mix quadratic and function-field scalars");
  if (kx == FieldKind::Quadratic || ky == FieldKind::Quadratic) return OpKind::Quadratic;
  if (kx == FieldKind::Function || ky == FieldKind::Function) return OpKind::Function;
  return OpKind::Rational;
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  switch (classify(*this, o)) {
    case OpKind::Rational:
      return Scalar(Rational(rational() + o.rational()));
    case OpKind::Quadratic: {
      const QuadPair p = as_quad_pair(*this, o);
      return quad_collapse(p.a1 + p.a2, p.b1 + p.b2, p.d);
    }
    case OpKind::Function: {
      const FuncPair p = as_func_pair(*this, o);
      // Work over the least common denominator so degrees grow linearly
      // across long sums instead of doubling at every step.
      const Poly2 g = poly2_gcd(p.d1, p.d2);
      if (g.is_constant()) return func_collapse(p.n1 * p.d2 + p.n2 * p.d1, p.d1 * p.d2);
      const Poly2 d2r = *p.d2.divide_exact(g);
      return func_collapse(p.n1 * d2r + p.n2 * *p.d1.divide_exact(g), p.d1 * d2r);
    }
  }
  throw ContractError("unreachable");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (std::holds_alternative<Rational>(value_)) return Scalar(Rational(-std::get<Rational>(value_)));
  if (std::holds_alternative<QuadElem>(value_)) {
    const QuadElem& e = std::get<QuadElem>(value_);
    return quad_collapse(-e.a, -e.b, e.d);
  }
  const RatFunc& f = std::get<RatFunc>(value_);
  return Scalar(std::variant<Rational, QuadElem, RatFunc>(RatFunc{-f.num, f.den}));
}

Scalar Scalar::operator*(const Scalar& o) const {
  switch (classify(*this, o)) {
    case OpKind::Rational:
      return Scalar(Rational(rational() * o.rational()));
    case OpKind::Quadratic: {
      const QuadPair p = as_quad_pair(*this, o);
      return quad_collapse(p.a1 * p.a2 + p.b1 * p.b2 * p.d, p.a1 * p.b2 + p.b1 * p.a2, p.d);
    }
    case OpKind::Function: {
      const FuncPair p = as_func_pair(*this, o);
      // Cross-cancel before multiplying; both factors are stored reduced, so
      // this leaves only a cheap confirmation gcd on the product.
      const Poly2 g1 = poly2_gcd(p.n1, p.d2);
      const Poly2 g2 = poly2_gcd(p.n2, p.d1);
      const Poly2 n1 = g1.is_constant() ? p.n1 : *p.n1.divide_exact(g1);
      const Poly2 d2 = g1.is_constant() ? p.d2 : *p.d2.divide_exact(g1);
      const Poly2 n2 = g2.is_constant() ? p.n2 : *p.n2.divide_exact(g2);
      const Poly2 d1 = g2.is_constant() ? p.d1 : *p.d1.divide_exact(g2);
      return func_collapse(n1 * n2, d1 * d2);
    }
  }
  throw ContractError("unreachable");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ContractError("division by zero");
  if (std::holds_alternative<Rational>(value_))
    return Scalar(Rational(Rational(1) / std::get<Rational>(value_)));
  if (std::holds_alternative<QuadElem>(value_)) {
    const QuadElem& e = std::get<QuadElem>(value_);
    // Norm a^2 - d b^2 is nonzero because d is not a rational square.
    const Rational norm = e.a * e.a - e.b * e.b * e.d;
    return quad_collapse(e.a / norm, -e.b / norm, e.d);
  }
  const RatFunc& f = std::get<RatFunc>(value_);
  return func_collapse(f.den, f.num);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (value_.index() != o.value_.index()) return false;
  if (std::holds_alternative<Rational>(value_))
    return std::get<Rational>(value_) == std::get<Rational>(o.value_);
  if (std::holds_alternative<QuadElem>(value_)) {
    const QuadElem& a = std::get<QuadElem>(value_);
    const QuadElem& b = std::get<QuadElem>(o.value_);
    return a.d == b.d && a.a == b.a && a.b == b.b;
  }
  const RatFunc& a = std::get<RatFunc>(value_);
  const RatFunc& b = std::get<RatFunc>(o.value_);
  return a.num == b.num && a.den == b.den;  // canonical form makes this sound
}

Scalar Scalar::conj() const {
  if (std::holds_alternative<Rational>(value_)) return *this;
  if (std::holds_alternative<QuadElem>(value_)) {
    const QuadElem& e = std::get<QuadElem>(value_);
    return quad_collapse(e.a, -e.b, e.d);
  }
  throw ContractError("conjugation is defined over Q and Q(sqrt d) only");
}

std::string Scalar::str() const {
  if (std::holds_alternative<Rational>(value_)) return rational_str(std::get<Rational>(value_));
  if (std::holds_alternative<QuadElem>(value_)) {
    const QuadElem& e = std::get<QuadElem>(value_);
    // Clear denominators: (p + q*sqrt(d))/r with gcd(p, q, r) = 1 and r >= 1.
    Integer r = lcm(e.a.get_den(), e.b.get_den());
    Integer p = e.a.get_num() * (r / e.a.get_den());
    Integer q = e.b.get_num() * (r / e.b.get_den());
    Integer g = gcd(gcd(abs(p), abs(q)), r);
    p /= g;
    q /= g;
    r /= g;
    const Integer qa = abs(q);
    std::string out = "(" + p.get_str() + (sgn(q) < 0 ? "-" : "+") + qa.get_str() + "√" +
                      std::to_string(e.d) + ")/" + r.get_str();
    return out;
  }
  const RatFunc& f = std::get<RatFunc>(value_);
  return "(" + f.num.str() + ")/(" + f.den.str() + ")";
}

Scalar operator+(int a, const Scalar& b) { return Scalar(a) + b; }
Scalar operator-(int a, const Scalar& b) { return Scalar(a) - b; }
Scalar operator*(int a, const Scalar& b) { return Scalar(a) * b; }

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum Type { Int, S, T, Sqrt, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } type;
  Integer value;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Int, Integer(std::string(text.substr(i, j - i)), 10), i});
      i = j;
      continue;
    }
    if (text.substr(i, 4) == "sqrt") {
      out.push_back({Token::Sqrt, 0, i});
      i += 4;
      continue;
    }
    // UTF-8 for the radical sign
    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < n &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x9A) {
      out.push_back({Token::Sqrt, 0, i});
      i += 3;
      continue;
    }
    Token::Type t;
    switch (c) {
      case 's': t = Token::S; break;
      case 't': t = Token::T; break;
      case '+': t = Token::Plus; break;
      case '-': t = Token::Minus; break;
      case '*': t = Token::Star; break;
      case '/': t = Token::Slash; break;
      case '^': t = Token::Caret; break;
      case '(': t = Token::LParen; break;
      case ')': t = Token::RParen; break;
      default:
        throw ContractError("unexpected character '" + std::string(1, c) + "' at position " +
                            std::to_string(i));
    }
    out.push_back({t, 0, i});
    ++i;
  }
  out.push_back({Token::End, 0, n});
  return out;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : toks_(tokenize(text)) {}

  Scalar run() {
    Scalar v = expr();
    expect(Token::End, "end of input");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token advance() { return toks_[pos_++]; }
  Token expect(Token::Type t, const std::string& what) {
    if (peek().type != t)
      throw ContractError("expected " + what + " at position " + std::to_string(peek().pos));
    return advance();
  }

  Scalar expr() {
    Scalar v = term();
    while (peek().type == Token::Plus || peek().type == Token::Minus) {
      const bool plus = advance().type == Token::Plus;
      const Scalar r = term();
      v = plus ? v + r : v - r;
    }
    return v;
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (peek().type == Token::Star || peek().type == Token::Slash) {
        const bool mul = advance().type == Token::Star;
        const Scalar r = unary();
        v = mul ? v * r : v / r;
      } else if (peek().type == Token::Sqrt) {
        v = v * unary();  // implicit product, e.g. "2√5"
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (peek().type == Token::Minus) {
      advance();
      return -unary();
    }
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (peek().type == Token::Caret) {
      advance();
      const Token e = expect(Token::Int, "a nonnegative integer exponent");
      if (e.value > 200) throw ContractError("exponent too large");
      const long k = e.value.get_si();
      Scalar acc = 1;
      for (long i = 0; i < k; ++i) acc *= base;
      return acc;
    }
    return base;
  }

  Scalar primary() {
    switch (peek().type) {
      case Token::Int:
        return Scalar(Rational(advance().value));
      case Token::S:
        advance();
        return Scalar::s();
      case Token::T:
        advance();
        return Scalar::t();
      case Token::Sqrt: {
        advance();
        bool paren = false;
        if (peek().type == Token::LParen) {
          advance();
          paren = true;
        }
        bool neg = false;
        if (peek().type == Token::Minus) {
          advance();
          neg = true;
        }
        const Token d = expect(Token::Int, "an integer radicand");
        if (paren) expect(Token::RParen, "')'");
        if (!d.value.fits_slong_p()) throw ContractError("radicand out of range");
        long dv = d.value.get_si();
        if (neg) dv = -dv;
        return Scalar::quadratic(0, 1, dv);
      }
      case Token::LParen: {
        advance();
        Scalar v = expr();
        expect(Token::RParen, "')'");
        return v;
      }
      default:
        throw ContractError("expected a value at position " + std::to_string(peek().pos));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ExprParser(text).run(); }

}  // namespace v5
