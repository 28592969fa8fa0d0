#include "v5/io.hpp"

namespace v5 {

namespace {

const Json& require_field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing required field");
  return *it;
}

void require_array_size(const Json& j, size_t n, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  if (j.size() != n)
    throw SchemaError(path, "expected an array of length " + std::to_string(n));
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_scalar(j.get<std::string>());
  } catch (const ContractError& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(path, "expected a scalar string or integer");
}

Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return static_cast<long>(r.get_num().get_si());
  return rational_str(r);
}

Json triple_to_json(const std::array<Scalar, 3>& v) {
  return Json::array({scalar_to_json(v[0]), scalar_to_json(v[1]), scalar_to_json(v[2])});
}

std::array<Scalar, 3> triple_from_json(const Json& j, const std::string& path) {
  require_array_size(j, 3, path);
  return {scalar_from_json(j[0], path + "/0"), scalar_from_json(j[1], path + "/1"),
          scalar_from_json(j[2], path + "/2")};
}

Json point_to_json(const ProjPoint& p) { return triple_to_json(p.coords()); }

ProjPoint point_from_json(const Json& j, const std::string& path) {
  const auto v = triple_from_json(j, path);
  try {
    return ProjPoint(v);
  } catch (const ContractError& e) {
    throw SchemaError(path, e.what());
  }
}

Json line_to_json(const ProjLine& l) { return triple_to_json(l.coords()); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& path, int rows, int cols) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected an array of rows");
  if (rows >= 0 && static_cast<int>(j.size()) != rows)
    throw SchemaError(path, "expected " + std::to_string(rows) + " rows");
  std::vector<std::vector<Scalar>> data;
  size_t width = 0;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string row_path = path + "/" + std::to_string(i);
    const Json& row = j[i];
    if (!row.is_array() || row.empty()) throw SchemaError(row_path, "expected an array row");
    if (i == 0) {
      width = row.size();
      if (cols >= 0 && static_cast<int>(width) != cols)
        throw SchemaError(row_path, "expected " + std::to_string(cols) + " columns");
    } else if (row.size() != width) {
      throw SchemaError(row_path, "ragged rows");
    }
    std::vector<Scalar> out;
    for (size_t k = 0; k < row.size(); ++k)
      out.push_back(scalar_from_json(row[k], row_path + "/" + std::to_string(k)));
    data.push_back(std::move(out));
  }
  return Matrix::from_rows(std::move(data));
}

// --- forms and schemes ------------------------------------------------------

Json form_to_json(const QuadraticForm& f) { return Json{{"gram", matrix_to_json(f.gram())}}; }

TernaryForm ternary_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a polynomial string");
  try {
    return parse_ternary_form(j.get<std::string>());
  } catch (const ContractError& e) {
    throw SchemaError(path, e.what());
  }
}

QuadraticForm form_from_payload(const Json& payload, const std::string& path_base) {
  if (!payload.is_object()) throw SchemaError(path_base.empty() ? "" : path_base, "expected an object");
  const auto gram_it = payload.find("gram");
  const auto form_it = payload.find("form");
  if (gram_it == payload.end() && form_it == payload.end())
    throw SchemaError(path_base + "/gram", "a quadratic form needs a \"gram\" matrix or a \"form\" polynomial");
  try {
    if (gram_it != payload.end())
      return QuadraticForm(matrix_from_json(*gram_it, path_base + "/gram", 3, 3));
    const TernaryForm p = ternary_from_json(*form_it, path_base + "/form");
    if (p.is_zero() || !p.is_homogeneous() || p.degree() != 2)
      throw SchemaError(path_base + "/form", "expected a homogeneous degree-2 polynomial");
    const Scalar half(make_rational(1, 2));
    Matrix gram(3, 3);
    gram.at(0, 0) = p.coeff(2, 0, 0);
    gram.at(1, 1) = p.coeff(0, 2, 0);
    gram.at(2, 2) = p.coeff(0, 0, 2);
    gram.at(0, 1) = gram.at(1, 0) = p.coeff(1, 1, 0) * half;
    gram.at(0, 2) = gram.at(2, 0) = p.coeff(1, 0, 1) * half;
    gram.at(1, 2) = gram.at(2, 1) = p.coeff(0, 1, 1) * half;
    return QuadraticForm(gram);
  } catch (const SchemaError&) {
    throw;
  } catch (const ContractError& e) {
    throw SchemaError(path_base + (gram_it != payload.end() ? "/gram" : "/form"), e.what());
  }
}

Json scheme_to_json(const LengthThreeScheme& z) {
  switch (z.kind()) {
    case LengthThreeScheme::Kind::Reduced:
      return Json{{"kind", "reduced"},
                  {"points", Json::array({point_to_json(z.points()[0]),
                                          point_to_json(z.points()[1]),
                                          point_to_json(z.points()[2])})}};
    case LengthThreeScheme::Kind::DoublePlusOne:
      return Json{{"kind", "double-plus-one"},
                  {"point", point_to_json(z.points()[0])},
                  {"direction", point_to_json(z.direction())},
                  {"second_point", point_to_json(z.points()[1])}};
    case LengthThreeScheme::Kind::Curvilinear:
      return Json{{"kind", "curvilinear"},
                  {"point", point_to_json(z.points()[0])},
                  {"direction", point_to_json(z.direction())},
                  {"second_order", triple_to_json(z.second_order())}};
  }
  throw std::logic_error("unreachable scheme kind");
}

LengthThreeScheme scheme_from_json(const Json& j, const std::string& path) {
  const Json& kind = require_field(j, "kind", path);
  if (!kind.is_string()) throw SchemaError(path + "/kind", "expected a string");
  const std::string name = kind.get<std::string>();
  try {
    if (name == "reduced") {
      const Json& pts = require_field(j, "points", path);
      require_array_size(pts, 3, path + "/points");
      return LengthThreeScheme::reduced(point_from_json(pts[0], path + "/points/0"),
                                        point_from_json(pts[1], path + "/points/1"),
                                        point_from_json(pts[2], path + "/points/2"));
    }
    if (name == "double-plus-one") {
      return LengthThreeScheme::double_plus_one(
          point_from_json(require_field(j, "point", path), path + "/point"),
          point_from_json(require_field(j, "direction", path), path + "/direction"),
          point_from_json(require_field(j, "second_point", path), path + "/second_point"));
    }
    if (name == "curvilinear") {
      std::array<Scalar, 3> second{};
      if (j.contains("second_order"))
        second = triple_from_json(j["second_order"], path + "/second_order");
      return LengthThreeScheme::curvilinear(
          triple_from_json(require_field(j, "point", path), path + "/point"),
          triple_from_json(require_field(j, "direction", path), path + "/direction"), second);
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const ContractError& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(path + "/kind",
                    "unknown scheme kind (expected reduced, double-plus-one, or curvilinear)");
}

Json pluecker_to_json(const PlueckerLine& l) {
  Json coords = Json::array();
  for (const Scalar& c : l.coords()) coords.push_back(scalar_to_json(c));
  return Json{{"coordinates", std::move(coords)},
              {"basis", matrix_to_json(l.basis())},
              {"basis_id", l.basis_id()}};
}

PlueckerLine pluecker_from_json(const Json& j, const std::string& path) {
  const Json& coords = require_field(j, "coordinates", path);
  require_array_size(coords, 10, path + "/coordinates");
  std::array<Scalar, 10> c;
  for (int i = 0; i < 10; ++i)
    c[i] = scalar_from_json(coords[i], path + "/coordinates/" + std::to_string(i));
  try {
    if (j.contains("basis"))
      return PlueckerLine(c, matrix_from_json(j["basis"], path + "/basis", 5, 6));
    if (j.contains("basis_id")) {
      const Json& id = j["basis_id"];
      if (!id.is_string()) throw SchemaError(path + "/basis_id", "expected a string");
      return PlueckerLine(c, quotient_basis_from_id(id.get<std::string>()));
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const ContractError& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(path + "/basis", "a line needs a \"basis\" matrix or a \"basis_id\"");
}

// --- certificates and reports ----------------------------------------------

Json certificate_to_json(const PointCertificate& c) {
  Json out{{"status", c.solvable ? "solvable" : "insolvable"}};
  if (c.witness) out["witness"] = point_to_json(*c.witness);
  if (c.obstruction) {
    Json o{{"reduced_form",
            Json::array({c.obstruction->reduced_form[0].get_str(),
                         c.obstruction->reduced_form[1].get_str(),
                         c.obstruction->reduced_form[2].get_str()})},
           {"definite", c.obstruction->definite},
           {"condition", c.obstruction->condition}};
    if (c.obstruction->prime != 0) o["prime"] = c.obstruction->prime.get_str();
    out["obstruction"] = std::move(o);
  }
  return out;
}

Json parametrization_to_json(const ConicParametrization& p) {
  Json forms = Json::array();
  for (const auto& row : p.forms) forms.push_back(triple_to_json(row));
  return Json{{"base", point_to_json(p.base)},
              {"order", "t^2, t*u, u^2"},
              {"forms", std::move(forms)}};
}

Json cylinder_report_to_json(const CylinderReport& r) {
  Json out{{"A2", r.a2},
           {"A2_citation", r.a2_citation},
           {"A3", r.a3 == CylinderReport::A3::True          ? "true"
                  : r.a3 == CylinderReport::A3::False       ? "false"
                                                            : "unsupported"},
           {"A3_citation", r.a3_citation}};
  if (r.special_line) out["special_line"] = point_to_json(*r.special_line);
  if (r.certificate) out["certificate"] = certificate_to_json(*r.certificate);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json identities_to_json(const std::vector<LatticeIdentity>& ids) {
  Json out = Json::array();
  for (const LatticeIdentity& id : ids)
    out.push_back(Json{{"name", id.name}, {"lhs", id.lhs}, {"rhs", id.rhs}, {"holds", id.holds}});
  return out;
}

namespace {
Json vec4_to_json(const std::array<long, 4>& v) { return Json::array({v[0], v[1], v[2], v[3]}); }
}  // namespace

Json typei_report_to_json(const TypeIReport& r) {
  return Json{{"basis", "H, e1, e2, e3"},
              {"e", vec4_to_json(r.e)},
              {"e_prime", vec4_to_json(r.e_prime)},
              {"canonical", vec4_to_json(r.canonical)},
              {"identities", identities_to_json(r.identities)},
              {"all_hold", r.all_hold}};
}

Json sarkisov_report_to_json(const SarkisovReport& r) {
  return Json{{"K3", rational_to_json(r.k3)},     {"K2G", rational_to_json(r.k2g)},
              {"KG2", rational_to_json(r.kg2)},   {"G3", rational_to_json(r.g3)},
              {"Gplus3", rational_to_json(r.gplus3)}, {"KY3", rational_to_json(r.ky3)},
              {"H3", rational_to_json(r.h3)}};
}

Json quadric_report_to_json(const QuadricLinkReport& r) {
  return Json{{"Z_prime", Json{{"qH", r.z_prime[0]}, {"E", r.z_prime[1]}}},
              {"Q0_prime", Json{{"qH", r.q0_prime[0]}, {"E", r.q0_prime[1]}}},
              {"pushforward", Json{{"H", r.pushforward_h}}},
              {"identities", identities_to_json(r.identities)},
              {"all_hold", r.all_hold}};
}

std::string stratum_name(StratumClass s) {
  switch (s) {
    case StratumClass::O:
      return "O";
    case StratumClass::S2:
      return "S2";
    case StratumClass::C6:
      return "C6";
    case StratumClass::OutsideTrichotomy:
      return "outside-trichotomy";
  }
  throw std::logic_error("unreachable stratum");
}

std::string involution_type_name(InvolutionType t) {
  switch (t) {
    case InvolutionType::I:
      return "I";
    case InvolutionType::II:
      return "II";
    case InvolutionType::III:
      return "III";
  }
  throw std::logic_error("unreachable involution type");
}

}  // namespace v5
