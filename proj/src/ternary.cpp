#include "v5/ternary.hpp"

#include <cctype>
#include <cstddef>

#include "v5/error.hpp"

namespace v5 {

TernaryForm TernaryForm::monomial(int i, int j, int k, const Scalar& c) {
  if (i < 0 || j < 0 || k < 0) throw ContractError("negative exponent");
  TernaryForm f;
  if (!c.is_zero()) f.terms_[{i, j, k}] = c;
  return f;
}

TernaryForm TernaryForm::linear(const std::array<Scalar, 3>& coeffs) {
  TernaryForm f;
  f.set_coeff(1, 0, 0, coeffs[0]);
  f.set_coeff(0, 1, 0, coeffs[1]);
  f.set_coeff(0, 0, 1, coeffs[2]);
  return f;
}

TernaryForm TernaryForm::quadratic_from_gram(const Matrix& gram) {
  if (gram.rows() != 3 || gram.cols() != 3 || !gram.is_symmetric())
    throw ContractError("Gram matrix must be symmetric 3x3");
  TernaryForm f;
  f.set_coeff(2, 0, 0, gram.at(0, 0));
  f.set_coeff(0, 2, 0, gram.at(1, 1));
  f.set_coeff(0, 0, 2, gram.at(2, 2));
  f.set_coeff(1, 1, 0, 2 * gram.at(0, 1));
  f.set_coeff(1, 0, 1, 2 * gram.at(0, 2));
  f.set_coeff(0, 1, 1, 2 * gram.at(1, 2));
  return f;
}

Scalar TernaryForm::coeff(int i, int j, int k) const {
  auto it = terms_.find({i, j, k});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void TernaryForm::set_coeff(int i, int j, int k, const Scalar& c) {
  if (i < 0 || j < 0 || k < 0) throw ContractError("negative exponent");
  if (c.is_zero())
    terms_.erase({i, j, k});
  else
    terms_[{i, j, k}] = c;
}

bool TernaryForm::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first[0] + terms_.begin()->first[1] + terms_.begin()->first[2];
  for (const auto& [key, c] : terms_)
    if (key[0] + key[1] + key[2] != d) return false;
  return true;
}

int TernaryForm::degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key[0] + key[1] + key[2]);
  return d;
}

TernaryForm TernaryForm::operator+(const TernaryForm& o) const {
  TernaryForm out = *this;
  for (const auto& [key, c] : o.terms_)
    out.set_coeff(key[0], key[1], key[2], out.coeff(key[0], key[1], key[2]) + c);
  return out;
}

TernaryForm TernaryForm::operator-(const TernaryForm& o) const { return *this + (-o); }

TernaryForm TernaryForm::operator-() const {
  TernaryForm out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

TernaryForm TernaryForm::operator*(const TernaryForm& o) const {
  TernaryForm out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      const int i = ka[0] + kb[0], j = ka[1] + kb[1], k = ka[2] + kb[2];
      out.set_coeff(i, j, k, out.coeff(i, j, k) + ca * cb);
    }
  return out;
}

TernaryForm TernaryForm::scaled(const Scalar& c) const {
  TernaryForm out;
  for (const auto& [key, v] : terms_) out.set_coeff(key[0], key[1], key[2], v * c);
  return out;
}

Scalar TernaryForm::evaluate(const std::array<Scalar, 3>& v) const {
  Scalar acc = 0;
  for (const auto& [key, c] : terms_) {
    Scalar term = c;
    for (int i = 0; i < key[0]; ++i) term *= v[0];
    for (int i = 0; i < key[1]; ++i) term *= v[1];
    for (int i = 0; i < key[2]; ++i) term *= v[2];
    acc += term;
  }
  return acc;
}

std::vector<std::array<int, 3>> TernaryForm::monomial_basis(int d) {
  if (d < 0) throw ContractError("negative degree");
  std::vector<std::array<int, 3>> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

std::vector<Scalar> TernaryForm::coeff_vector(int d) const {
  if (!is_zero() && (!is_homogeneous() || degree() != d))
    throw ContractError("coefficient vector requires a homogeneous form of the stated degree");
  std::vector<Scalar> out;
  for (const auto& m : monomial_basis(d)) out.push_back(coeff(m[0], m[1], m[2]));
  return out;
}

std::string TernaryForm::str() const {
  if (terms_.empty()) return "0";
  // Descending lex on exponents, x > y > z.
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& key = it->first;
    Scalar c = it->second;
    std::string sign;
    if (c.kind() == FieldKind::Rational && sgn(c.rational()) < 0) {
      sign = "-";
      c = -c;
    }
    std::vector<std::string> factors;
    const bool has_var = key[0] + key[1] + key[2] > 0;
    if (!has_var || !c.is_one()) {
      const bool atomic = c.kind() == FieldKind::Rational;
      factors.push_back(atomic ? c.str() : "(" + c.str() + ")");
    }
    const char* names = "xyz";
    for (int v = 0; v < 3; ++v) {
      if (key[v] == 1) factors.push_back(std::string(1, names[v]));
      if (key[v] > 1) factors.push_back(std::string(1, names[v]) + "^" + std::to_string(key[v]));
    }
    std::string term;
    for (std::size_t i = 0; i < factors.size(); ++i) term += (i ? "*" : "") + factors[i];
    if (first) {
      out = sign + term;
      first = false;
    } else {
      out += (sign == "-" ? " - " : " + ") + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial expression parser (scalar grammar plus the variables x, y, z)
// ---------------------------------------------------------------------------

namespace {

struct PTok {
  enum Type { Int, Var, S, T, Sqrt, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } type;
  Integer value;
  int var = 0;  // 0, 1, 2 for x, y, z
  std::size_t pos = 0;
};

std::vector<PTok> tokenize_poly(std::string_view text) {
  std::vector<PTok> out;
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
      out.push_back({PTok::Int, Integer(std::string(text.substr(i, j - i)), 10), 0, i});
      i = j;
      continue;
    }
    if (text.substr(i, 4) == "sqrt") {
      out.push_back({PTok::Sqrt, 0, 0, i});
      i += 4;
      continue;
    }
    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < n &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x9A) {
      out.push_back({PTok::Sqrt, 0, 0, i});
      i += 3;
      continue;
    }
    PTok t{PTok::End, 0, 0, i};
    switch (c) {
      case 'x': t.type = PTok::Var; t.var = 0; break;
      case 'y': t.type = PTok::Var; t.var = 1; break;
      case 'z': t.type = PTok::Var; t.var = 2; break;
      case 's': t.type = PTok::S; break;
      case 't': t.type = PTok::T; break;
      case '+': t.type = PTok::Plus; break;
      case '-': t.type = PTok::Minus; break;
      case '*': t.type = PTok::Star; break;
      case '/': t.type = PTok::Slash; break;
      case '^': t.type = PTok::Caret; break;
      case '(': t.type = PTok::LParen; break;
      case ')': t.type = PTok::RParen; break;
      default:
        throw ContractError("unexpected character '" + std::string(1, c) + "' at position " +
                            std::to_string(i));
    }
    out.push_back(t);
    ++i;
  }
  out.push_back({PTok::End, 0, 0, n});
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : toks_(tokenize_poly(text)) {}

  TernaryForm run() {
    TernaryForm v = expr();
    expect(PTok::End, "end of input");
    return v;
  }

 private:
  const PTok& peek() const { return toks_[pos_]; }
  PTok advance() { return toks_[pos_++]; }
  PTok expect(PTok::Type t, const std::string& what) {
    if (peek().type != t)
      throw ContractError("expected " + what + " at position " + std::to_string(peek().pos));
    return advance();
  }

  TernaryForm expr() {
    TernaryForm v = term();
    while (peek().type == PTok::Plus || peek().type == PTok::Minus) {
      const bool plus = advance().type == PTok::Plus;
      const TernaryForm r = term();
      v = plus ? v + r : v - r;
    }
    return v;
  }

  TernaryForm term() {
    TernaryForm v = unary();
    while (true) {
      if (peek().type == PTok::Star || peek().type == PTok::Slash) {
        const bool mul = advance().type == PTok::Star;
        const TernaryForm r = unary();
        if (mul) {
          v = v * r;
        } else {
          // Division only by a degree-zero value.
          if (!r.is_zero() && r.degree() > 0)
            throw ContractError("cannot divide by a polynomial in x, y, z");
          v = v.scaled(r.coeff(0, 0, 0).inverse());
        }
      } else if (peek().type == PTok::Sqrt) {
        v = v * unary();  // implicit product, e.g. "2√5"
      } else {
        return v;
      }
    }
  }

  TernaryForm unary() {
    if (peek().type == PTok::Minus) {
      advance();
      return -unary();
    }
    return power();
  }

  TernaryForm power() {
    TernaryForm base = primary();
    if (peek().type == PTok::Caret) {
      advance();
      const PTok e = expect(PTok::Int, "a nonnegative integer exponent");
      if (e.value > 60) throw ContractError("exponent too large");
      const long k = e.value.get_si();
      TernaryForm acc = TernaryForm::constant(Scalar(1));
      for (long i = 0; i < k; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  TernaryForm primary() {
    switch (peek().type) {
      case PTok::Int:
        return TernaryForm::constant(Scalar(Rational(advance().value)));
      case PTok::Var: {
        const int v = advance().var;
        return TernaryForm::monomial(v == 0 ? 1 : 0, v == 1 ? 1 : 0, v == 2 ? 1 : 0, Scalar(1));
      }
      case PTok::S:
        advance();
        return TernaryForm::constant(Scalar::s());
      case PTok::T:
        advance();
        return TernaryForm::constant(Scalar::t());
      case PTok::Sqrt: {
        advance();
        bool paren = false;
        if (peek().type == PTok::LParen) {
          advance();
          paren = true;
        }
        bool neg = false;
        if (peek().type == PTok::Minus) {
          advance();
          neg = true;
        }
        const PTok d = expect(PTok::Int, "an integer radicand");
        if (paren) expect(PTok::RParen, "')'");
        if (!d.value.fits_slong_p()) throw ContractError("radicand out of range");
        long dv = d.value.get_si();
        if (neg) dv = -dv;
        return TernaryForm::constant(Scalar::quadratic(0, 1, dv));
      }
      case PTok::LParen: {
        advance();
        TernaryForm v = expr();
        expect(PTok::RParen, "')'");
        return v;
      }
      default:
        throw ContractError("expected a value at position " + std::to_string(peek().pos));
    }
  }

  std::vector<PTok> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

TernaryForm parse_ternary_form(std::string_view text) { return PolyParser(text).run(); }

int scheme_length_from_forms(const std::vector<TernaryForm>& generators, int d) {
  if (d < 3) throw ContractError("length is computed in degree at least 3");
  std::vector<std::vector<Scalar>> rows;
  for (const TernaryForm& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw ContractError("inhomogeneous generator");
    const int e = g.degree();
    if (e > d) continue;
    for (const auto& m : TernaryForm::monomial_basis(d - e)) {
      const TernaryForm prod = TernaryForm::monomial(m[0], m[1], m[2], Scalar(1)) * g;
      rows.push_back(prod.coeff_vector(d));
    }
  }
  const int dim_sd = (d + 1) * (d + 2) / 2;
  if (rows.empty()) return dim_sd;
  return dim_sd - Matrix::from_rows(std::move(rows)).rank();
}

}  // namespace v5
