#include "v5/conic.hpp"

#include <cstdlib>
#include <set>
#include <vector>

#include "v5/error.hpp"

namespace v5 {

QuadraticForm::QuadraticForm(const Matrix& gram) : gram_(gram) {
  if (gram.rows() != 3 || gram.cols() != 3) throw ContractError("Gram matrix must be 3x3");
  if (!gram.is_symmetric()) throw ContractError("Gram matrix must be symmetric");
  bool has_func = false;
  std::set<long> radicands;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Scalar& e = gram.at(i, j);
      if (e.kind() == FieldKind::Function) has_func = true;
      if (e.kind() == FieldKind::Quadratic) radicands.insert(e.quadratic_value().d);
    }
  if (has_func && !radicands.empty())
    throw ContractError("Gram matrix mixes quadratic and function-field entries");
  if (radicands.size() > 1) throw ContractError("Gram matrix mixes distinct radicands");
  field_ = has_func             ? FieldKind::Function
           : !radicands.empty() ? FieldKind::Quadratic
                                : FieldKind::Rational;
  det_ = gram.determinant();
  adj_ = gram.adjugate3();
}

QuadraticForm QuadraticForm::diagonal(const std::array<Scalar, 3>& d) {
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i) m.at(i, i) = d[i];
  return QuadraticForm(m);
}

Scalar QuadraticForm::evaluate_vec(const std::array<Scalar, 3>& v) const {
  return bilinear(v, v);
}

Scalar QuadraticForm::bilinear(const std::array<Scalar, 3>& u,
                               const std::array<Scalar, 3>& v) const {
  Scalar acc = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += u[i] * gram_.at(i, j) * v[j];
  return acc;
}

ConicInvariants conic_invariants(const QuadraticForm& f) {
  return {f.smooth(), f.det(), f.dual()};
}

ProjLine polar_line(const QuadraticForm& n, const ProjPoint& u) {
  if (!n.smooth()) throw ContractError("polar line requires a smooth conic");
  const auto c = n.gram().apply({u[0], u[1], u[2]});
  return ProjLine(c[0], c[1], c[2]);
}

// ---------------------------------------------------------------------------
// Legendre-style decision machinery
// ---------------------------------------------------------------------------

namespace {

constexpr long kTrialLimit = 1000000;

// n = s * m^2 with s squarefree, sign(s) = sign(n).  Trial division up to
// 10^6; a larger unfactored cofactor must be certifiably prime or a perfect
// square, otherwise the input is rejected.
void squarefree_part(const Integer& n, Integer& s, Integer& m) {
  if (n == 0) throw ContractError("squarefree part of zero");
  Integer rest = abs(n);
  s = sgn(n);
  m = 1;
  for (long p = 2; p <= kTrialLimit; ++p) {
    if (Integer(p) * p > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) m *= p;
    if (e % 2) s *= p;
  }
  if (rest == 1) return;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    m *= r;
    return;
  }
  const Integer prime_cert = Integer(kTrialLimit) * kTrialLimit;
  if (rest < prime_cert) {  // no factor below its square root, hence prime
    s *= rest;
    return;
  }
  throw ContractError("cannot certify the squarefree part of " + n.get_str());
}

// Distinct odd prime factors of a squarefree integer.
std::vector<Integer> odd_prime_factors(const Integer& n) {
  Integer rest = abs(n);
  std::vector<Integer> out;
  for (long p = 2; p <= kTrialLimit; ++p) {
    if (Integer(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      if (p != 2) out.push_back(p);
    }
  }
  if (rest > 1) {
    const Integer prime_cert = Integer(kTrialLimit) * kTrialLimit;
    if (rest >= prime_cert)
      throw ContractError("cannot factor coefficient " + n.get_str());
    if (rest != 2) out.push_back(rest);
  }
  return out;
}

bool is_quadratic_residue(const Integer& n, const Integer& p) {
  Integer r = n % p;
  if (r < 0) r += p;
  if (r == 0) return true;
  Integer e = (p - 1) / 2, out;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return out == 1;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> search_cap_from_env() {
  const char* raw = std::getenv("QF_MAX_SEARCH");
  if (!raw) return std::nullopt;
  const std::string text(raw);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ContractError("QF_MAX_SEARCH must be a nonnegative integer");
  return Integer(text, 10);
}

struct ReducedDiagonal {
  std::array<Integer, 3> a;  // squarefree, pairwise coprime, nonzero
  Matrix back;               // original coords = back * reduced coords
};

// Clears denominators and square parts, then enforces pairwise coprimality
// by the classical (a, b, c) -> (a/g, b/g, c*g) moves, tracking the diagonal
// change of variables throughout.
ReducedDiagonal reduce_diagonal(const std::array<Rational, 3>& diag, const Matrix& p) {
  Integer l = 1;
  for (const Rational& q : diag) l = lcm(l, q.get_den());
  std::array<Integer, 3> a;
  for (int i = 0; i < 3; ++i) a[i] = diag[i].get_num() * (l / diag[i].get_den());

  Matrix back = p;
  auto scale_col = [&back](int j, const Scalar& c) {
    for (int i = 0; i < 3; ++i) back.at(i, j) *= c;
  };

  for (int i = 0; i < 3; ++i) {
    Integer s, m;
    squarefree_part(a[i], s, m);
    a[i] = s;
    if (m != 1) scale_col(i, Scalar(make_rational(1, m)));
  }

  while (true) {
    Integer h = gcd(gcd(a[0], a[1]), a[2]);
    if (h > 1)
      for (auto& x : a) x /= h;
    bool reduced = false;
    constexpr int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (const auto& pr : pairs) {
      const Integer g = gcd(a[pr[0]], a[pr[1]]);
      if (g > 1) {
        a[pr[0]] /= g;
        a[pr[1]] /= g;
        a[pr[2]] *= g;
        // (X, Y, g*Z) solves the previous form when (X, Y, Z) solves the new.
        scale_col(pr[2], Scalar(Rational(g)));
        reduced = true;
        break;
      }
    }
    if (!reduced) break;
  }
  return {a, back};
}

const char kCoeffNames[4] = "abc";

// Residue conditions of the Legendre criterion; nullopt when all pass.
std::optional<LocalObstruction> local_obstruction(const std::array<Integer, 3>& a) {
  if (sgn(a[0]) == sgn(a[1]) && sgn(a[1]) == sgn(a[2])) {
    LocalObstruction o;
    o.reduced_form = a;
    o.definite = true;
    o.condition = "all diagonal coefficients share one sign (definite form)";
    return o;
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const Integer target = -(a[j] * a[k]);
    for (const Integer& p : odd_prime_factors(a[i])) {
      if (!is_quadratic_residue(target, p)) {
        LocalObstruction o;
        o.reduced_form = a;
        o.prime = p;
        o.condition = std::string("-") + kCoeffNames[j] + kCoeffNames[k] + " = " +
                      target.get_str() + " is not a quadratic residue modulo " + p.get_str() +
                      " (prime divides " + kCoeffNames[i] + ")";
        return o;
      }
    }
  }
  return std::nullopt;
}

// First solution of a X^2 + b Y^2 + c Z^2 = 0 with 0 <= Y <= by, 0 <= X <= bx,
// searched in ascending (Y, X) order.
std::optional<std::array<Integer, 3>> bounded_witness_search(const std::array<Integer, 3>& a,
                                                             const Integer& bx,
                                                             const Integer& by) {
  for (Integer y = 0; y <= by; ++y)
    for (Integer x = 0; x <= bx; ++x) {
      if (x == 0 && y == 0) continue;
      const Integer num = -(a[0] * x * x + a[1] * y * y);
      if (!mpz_divisible_p(num.get_mpz_t(), a[2].get_mpz_t())) continue;
      const Integer zz = num / a[2];
      if (zz < 0 || !mpz_perfect_square_p(zz.get_mpz_t())) continue;
      return std::array<Integer, 3>{x, y, isqrt(zz)};
    }
  return std::nullopt;
}

}  // namespace

PointCertificate has_rational_point(const QuadraticForm& f) {
  if (f.field() != FieldKind::Rational)
    throw UnsupportedError("rational-point decision is available over Q only");
  if (!f.smooth()) throw ContractError("rational-point decision requires a smooth conic");

  const Diagonalization dg = diagonalize_symmetric(f.gram());
  const std::array<Rational, 3> diag{dg.D.at(0, 0).rational(), dg.D.at(1, 1).rational(),
                                     dg.D.at(2, 2).rational()};
  const ReducedDiagonal red = reduce_diagonal(diag, dg.P);

  if (auto obstruction = local_obstruction(red.a)) {
    PointCertificate cert;
    cert.solvable = false;
    cert.obstruction = std::move(*obstruction);
    return cert;
  }

  Integer bx = isqrt(abs(red.a[1] * red.a[2]));
  Integer by = isqrt(abs(red.a[0] * red.a[2]));
  bool capped = false;
  if (const auto cap = search_cap_from_env()) {
    if (*cap < bx) {
      bx = *cap;
      capped = true;
    }
    if (*cap < by) {
      by = *cap;
      capped = true;
    }
  }
  const auto reduced_witness = bounded_witness_search(red.a, bx, by);
  if (!reduced_witness) {
    if (capped)
      throw ContractError(
          "QF_MAX_SEARCH caps the witness search below the Holzer bound; cannot certify");
    // The residue conditions guarantee a witness within the Holzer bound.
    throw std::logic_error("no witness within the Holzer bound despite passing conditions");
  }
  const auto v = red.back.apply(
      {Scalar(Rational((*reduced_witness)[0])), Scalar(Rational((*reduced_witness)[1])),
       Scalar(Rational((*reduced_witness)[2]))});
  const ProjPoint witness(v[0], v[1], v[2]);
  if (!f.evaluate(witness).is_zero())
    throw std::logic_error("witness failed exact verification");

  PointCertificate cert;
  cert.solvable = true;
  cert.witness = witness;
  return cert;
}

std::optional<std::array<Integer, 3>> detail::solve_diagonal_capped(
    const std::array<Integer, 3>& a, const Integer& cap) {
  for (const Integer& x : a)
    if (x == 0) throw ContractError("diagonal coefficients must be nonzero");
  const std::array<Rational, 3> diag{Rational(a[0]), Rational(a[1]), Rational(a[2])};
  const ReducedDiagonal red = reduce_diagonal(diag, Matrix::identity(3));
  if (local_obstruction(red.a)) return std::nullopt;

  Integer bx = isqrt(abs(red.a[1] * red.a[2]));
  Integer by = isqrt(abs(red.a[0] * red.a[2]));
  if (cap < bx) bx = cap;
  if (cap < by) by = cap;
  const auto w = bounded_witness_search(red.a, bx, by);
  if (!w) return std::nullopt;

  const auto v = red.back.apply({Scalar(Rational((*w)[0])), Scalar(Rational((*w)[1])),
                                 Scalar(Rational((*w)[2]))});
  Integer l = 1;
  for (const Scalar& c : v) l = lcm(l, c.rational().get_den());
  std::array<Integer, 3> out;
  Integer g = 0;
  for (int i = 0; i < 3; ++i) {
    out[i] = v[i].rational().get_num() * (l / v[i].rational().get_den());
    g = gcd(g, out[i]);
  }
  for (auto& x : out) x /= g;
  Integer total = 0;
  for (int i = 0; i < 3; ++i) total += a[i] * out[i] * out[i];
  if (total != 0) throw std::logic_error("mapped diagonal witness failed verification");
  return out;
}

// ---------------------------------------------------------------------------
// Parametrization and descent
// ---------------------------------------------------------------------------

ProjPoint ConicParametrization::at(const Scalar& t, const Scalar& u) const {
  std::array<Scalar, 3> v;
  for (int i = 0; i < 3; ++i)
    v[i] = forms[i][0] * t * t + forms[i][1] * t * u + forms[i][2] * u * u;
  return ProjPoint(v[0], v[1], v[2]);
}

ConicParametrization parametrize(const QuadraticForm& f, const ProjPoint& p) {
  if (!f.smooth()) throw ContractError("parametrization requires a smooth conic");
  if (!f.evaluate(p).is_zero()) throw ContractError("base point is not on the conic");

  const std::array<Scalar, 3> pc = p.coords();
  const auto tangent = f.gram().apply({pc[0], pc[1], pc[2]});
  const std::array<Scalar, 3> tv{tangent[0], tangent[1], tangent[2]};

  // Second frame point: on the tangent line, distinct from p.
  std::optional<ProjPoint> e2;
  for (int j = 0; j < 3 && !e2; ++j) {
    std::array<Scalar, 3> ej{};
    ej[j] = 1;
    const auto c = cross(tv, ej);
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
    const auto pc_cross = cross(c, pc);
    if (pc_cross[0].is_zero() && pc_cross[1].is_zero() && pc_cross[2].is_zero()) continue;
    e2 = ProjPoint(c[0], c[1], c[2]);
  }
  if (!e2) throw std::logic_error("no frame point on the tangent line");

  // First frame point: a standard basis vector completing (p, e2) to a frame.
  std::optional<std::array<Scalar, 3>> e1;
  for (int j = 0; j < 3 && !e1; ++j) {
    std::array<Scalar, 3> ej{};
    ej[j] = 1;
    Matrix m = Matrix::from_rows({{pc[0], pc[1], pc[2]},
                                  {(*e2)[0], (*e2)[1], (*e2)[2]},
                                  {ej[0], ej[1], ej[2]}});
    if (!m.determinant().is_zero()) e1 = ej;
  }
  if (!e1) throw std::logic_error("no frame completion");

  // Chord construction q = f(w) p - 2 B(p, w) w along w = t e1 + u e2.
  // B(p, e2) = 0 because e2 lies on the tangent at p, so [0:1] maps to p.
  const std::array<Scalar, 3> e2c = e2->coords();
  const Scalar fe1 = f.evaluate_vec(*e1);
  const Scalar fe2 = f.evaluate_vec(e2c);
  const Scalar b12 = f.bilinear(*e1, e2c);
  const Scalar bp1 = f.bilinear({pc[0], pc[1], pc[2]}, *e1);

  ConicParametrization out{{}, p};
  for (int i = 0; i < 3; ++i) {
    out.forms[i][0] = fe1 * pc[i] - 2 * bp1 * (*e1)[i];
    out.forms[i][1] = 2 * b12 * pc[i] - 2 * bp1 * e2c[i];
    out.forms[i][2] = fe2 * pc[i];
  }

  // Canonical scaling over Q: content-free integers, then t -> -t if the
  // first nonzero t*u coefficient is negative.
  bool all_rational = true;
  for (const auto& row : out.forms)
    for (const Scalar& c : row)
      if (c.kind() != FieldKind::Rational) all_rational = false;
  if (all_rational) {
    Integer l = 1;
    for (const auto& row : out.forms)
      for (const Scalar& c : row) l = lcm(l, c.rational().get_den());
    Integer g = 0;
    for (const auto& row : out.forms)
      for (const Scalar& c : row) g = gcd(g, Integer(c.rational().get_num() * (l / c.rational().get_den())));
    const Scalar factor(make_rational(l, g));  // g > 0: not all coefficients vanish
    for (auto& row : out.forms)
      for (Scalar& c : row) c *= factor;
    for (int i = 0; i < 3; ++i) {
      const Scalar& tu = out.forms[i][1];
      if (tu.is_zero()) continue;
      if (sgn(tu.rational()) < 0)
        for (auto& row : out.forms) row[1] = -row[1];
      break;
    }
  }
  return out;
}

ProjPoint descend_rational_point(const QuadraticForm& f, const ProjPoint& p) {
  if (f.field() != FieldKind::Rational)
    throw ContractError("tangent descent requires a conic defined over Q");
  if (!f.smooth()) throw ContractError("tangent descent requires a smooth conic");
  for (int i = 0; i < 3; ++i)
    if (p[i].kind() == FieldKind::Function)
      throw ContractError("tangent descent requires coordinates in Q(√d)");
  if (!f.evaluate(p).is_zero()) throw ContractError("point is not on the conic");
  if (p.is_rational()) return p;  // Galois-invariant already

  const auto tangent = f.gram().apply({p[0], p[1], p[2]});
  const std::array<Scalar, 3> l{tangent[0], tangent[1], tangent[2]};
  const std::array<Scalar, 3> lbar{l[0].conj(), l[1].conj(), l[2].conj()};
  const auto q = cross(l, lbar);
  if (q[0].is_zero() && q[1].is_zero() && q[2].is_zero())
    throw std::logic_error("conjugate tangents coincide at a non-rational point");
  const ProjPoint out(q[0], q[1], q[2]);
  if (!out.is_rational())
    throw std::logic_error("tangent intersection is not Galois-invariant");
  if (f.evaluate(out).is_zero())
    throw std::logic_error("tangent intersection unexpectedly lies on the conic");
  return out;
}

}  // namespace v5
