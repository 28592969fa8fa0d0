#include "v5/cli.hpp"

#include <functional>
#include <map>
#include <optional>

namespace v5 {

namespace {

struct HandlerResult {
  Json result;
  Json certificate = nullptr;
  Json citation = nullptr;
  std::string status = "ok";
};

using Handler = std::function<HandlerResult(const Json&)>;

ProjPoint payload_point(const Json& payload, const char* key) {
  if (!payload.contains(key))
    throw SchemaError(std::string("/") + key, "missing required field");
  return point_from_json(payload[key], std::string("/") + key);
}

const Json& require_scheme(const Json& payload) {
  if (!payload.contains("scheme")) throw SchemaError("/scheme", "missing required field");
  return payload["scheme"];
}

// --- conic commands ----------------------------------------------------------

HandlerResult cmd_conic_invariants(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const ConicInvariants inv = conic_invariants(f);
  HandlerResult out;
  out.result = Json{{"smooth", inv.smooth},
                    {"det", scalar_to_json(inv.det)},
                    {"dual", form_to_json(inv.dual)}};
  return out;
}

HandlerResult cmd_conic_solve(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const PointCertificate cert = has_rational_point(f);
  HandlerResult out;
  out.result = Json{{"solvable", cert.solvable}};
  out.certificate = certificate_to_json(cert);
  out.citation =
      "A diagonal conic a*X^2 + b*Y^2 + c*Z^2 over the rationals with squarefree pairwise "
      "coprime coefficients has a rational point if and only if the coefficients do not all "
      "share a sign and -b*c, -a*c, -a*b are squares modulo a, b, c respectively; a solvable "
      "form has a witness within the bounds (sqrt|bc|, sqrt|ac|, sqrt|ab|).";
  return out;
}

HandlerResult cmd_conic_polar(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const ProjLine l = polar_line(f, payload_point(payload, "point"));
  HandlerResult out;
  out.result = Json{{"line", line_to_json(l)}};
  return out;
}

HandlerResult cmd_conic_parametrize(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const ConicParametrization par = parametrize(f, payload_point(payload, "point"));
  HandlerResult out;
  out.result = parametrization_to_json(par);
  out.citation =
      "A smooth conic with a rational point is parametrized by the pencil of lines through "
      "that point, each residual intersection depending quadratically on the line.";
  return out;
}

HandlerResult cmd_conic_descend(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const ProjPoint p = descend_rational_point(f, payload_point(payload, "point"));
  HandlerResult out;
  out.result = Json{{"point", point_to_json(p)}};
  out.citation =
      "For a conic point with coordinates in a quadratic extension, the tangent lines at the "
      "point and at its Galois conjugate meet in a rational point off the conic.";
  return out;
}

// --- vsp commands --------------------------------------------------------------

HandlerResult cmd_vsp_decompose(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const ApolarDecomposition dec = apolar_decompose(f);
  HandlerResult out;
  out.result = Json{{"scheme", scheme_to_json(dec.scheme)},
                    {"lambda", triple_to_json(dec.lambda)}};
  out.citation =
      "A smooth quadratic form in three variables is a weighted sum of the squares of three "
      "independent linear forms, produced here by congruence diagonalization.";
  return out;
}

HandlerResult cmd_vsp_apolar_check(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const LengthThreeScheme z =
      scheme_from_json(require_scheme(payload), "/scheme");
  const ApolarCheckResult chk = apolar_check(f, z);
  HandlerResult out;
  out.result = Json{{"apolar", chk.apolar}};
  if (chk.lambda) out.result["lambda"] = triple_to_json(*chk.lambda);
  out.citation =
      "A length-3 scheme is apolar to a form exactly when the form lies in the span of the "
      "scheme's image under the second Veronese map.";
  return out;
}

HandlerResult cmd_vsp_stratum(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const LengthThreeScheme z = scheme_from_json(require_scheme(payload), "/scheme");
  HandlerResult out;
  out.result = Json{{"stratum", stratum_name(stratum_classify(f, z))}};
  out.citation =
      "Apolar length-3 schemes are reduced with support off the dual conic, or a double "
      "point on the dual conic with its reduced partner on the tangent line, or a "
      "curvilinear point on the dual conic with jet along the tangent line.";
  return out;
}

HandlerResult cmd_vsp_trisecant(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const LengthThreeScheme z = scheme_from_json(require_scheme(payload), "/scheme");
  HandlerResult out;
  out.result = pluecker_to_json(trisecant_line(f, z));
  out.citation =
      "The images of an apolar reduced scheme under the Veronese map followed by projection "
      "from the form span a line; these are the trisecant lines of the projected Veronese "
      "surface.";
  return out;
}

HandlerResult cmd_vsp_pullback(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  if (!payload.contains("line")) throw SchemaError("/line", "missing required field");
  const PlueckerLine line = pluecker_from_json(payload["line"], "/line");
  const PullbackResult res = veronese_pullback(f, line);
  Json conics = Json::array();
  for (const QuadraticForm& c : res.conics) conics.push_back(form_to_json(c));
  HandlerResult out;
  out.result = Json{{"conics", std::move(conics)}, {"length", res.length}};
  out.citation =
      "A line in the projection of the Veronese surface from a form pulls back to a net of "
      "conics; the line is trisecant exactly when the net cuts a scheme of length 3.";
  return out;
}

HandlerResult cmd_vsp_special_line(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  HandlerResult out;
  out.result = Json{{"special", is_special_line(f, payload_point(payload, "point"))}};
  out.citation = "Special lines are parametrized by the points of the dual conic.";
  return out;
}

HandlerResult cmd_vsp_incidence(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  HandlerResult out;
  out.result = Json{{"line", line_to_json(incidence_locus(f, payload_point(payload, "point")))}};
  out.citation =
      "The lines meeting the line labeled by a point are parametrized by that point's polar "
      "line with respect to the dual conic.";
  return out;
}

HandlerResult cmd_vsp_cylinders(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const CylinderReport rep = decide_cylinders(f);
  HandlerResult out;
  out.result = cylinder_report_to_json(rep);
  if (rep.certificate) out.certificate = certificate_to_json(*rep.certificate);
  out.citation = rep.a3_citation;
  if (rep.a3 == CylinderReport::A3::Unsupported) out.status = "unsupported";
  return out;
}

HandlerResult cmd_vsp_hilbert_point(const Json& payload) {
  const QuadraticForm f = form_from_payload(payload, "");
  const ProjPoint p = hilbert_rational_point(f);
  const bool on_dual = QuadraticForm(f.adjugate()).evaluate(p).is_zero();
  HandlerResult out;
  out.result = Json{{"point", point_to_json(p)}, {"on_dual_conic", on_dual}};
  out.citation =
      "The space of lines on a form of the quintic del Pezzo threefold is a projective "
      "plane over the base field; its rational points correspond to the lines sought.";
  return out;
}

// --- involution commands --------------------------------------------------------

HandlerResult cmd_involution_classify(const Json& payload) {
  InvolutionBaseScheme z{scheme_from_json(require_scheme(payload), "/scheme"), std::nullopt};
  if (payload.contains("net")) {
    const Json& net = payload["net"];
    if (!net.is_array() || net.empty()) throw SchemaError("/net", "expected an array of conics");
    std::vector<TernaryForm> gens;
    for (size_t i = 0; i < net.size(); ++i)
      gens.push_back(ternary_from_json(net[i], "/net/" + std::to_string(i)));
    z.net = std::move(gens);
  }
  HandlerResult out;
  out.result = Json{{"type", involution_type_name(classify_base_scheme(z))}};
  out.citation =
      "The base scheme of a standard quadratic involution of the plane is three "
      "non-collinear points, a double point plus a point, or one curvilinear triple point.";
  return out;
}

HandlerResult cmd_involution_verify_type1(const Json& payload) {
  if (!payload.contains("points")) throw SchemaError("/points", "missing required field");
  const Json& pts = payload["points"];
  if (!pts.is_array() || pts.size() != 3)
    throw SchemaError("/points", "expected an array of three points");
  const TypeIReport rep = typeI_lattice_verify(point_from_json(pts[0], "/points/0"),
                                               point_from_json(pts[1], "/points/1"),
                                               point_from_json(pts[2], "/points/2"));
  HandlerResult out;
  out.result = typei_report_to_json(rep);
  out.citation =
      "On the blow-up of the plane at the three base points, the involution's graph classes "
      "satisfy K = -(e + e') and 2e + e' = 3H exactly.";
  return out;
}

HandlerResult cmd_involution_length(const Json& payload) {
  if (!payload.contains("generators"))
    throw SchemaError("/generators", "missing required field");
  const Json& gens_json = payload["generators"];
  if (!gens_json.is_array() || gens_json.empty())
    throw SchemaError("/generators", "expected an array of polynomials");
  std::vector<TernaryForm> gens;
  for (size_t i = 0; i < gens_json.size(); ++i)
    gens.push_back(ternary_from_json(gens_json[i], "/generators/" + std::to_string(i)));
  int degree = 3;
  if (payload.contains("degree")) {
    if (!payload["degree"].is_number_integer())
      throw SchemaError("/degree", "expected an integer");
    degree = payload["degree"].get<int>();
  }
  HandlerResult out;
  try {
    out.result = Json{{"length", scheme_length_from_forms(gens, degree)}, {"degree", degree}};
  } catch (const ContractError& e) {
    throw SchemaError("/degree", e.what());
  }
  return out;
}

// --- chow commands ---------------------------------------------------------------

long payload_long(const Json& payload, const char* key) {
  if (!payload.contains(key))
    throw SchemaError(std::string("/") + key, "missing required field");
  if (!payload[key].is_number_integer())
    throw SchemaError(std::string("/") + key, "expected an integer");
  return payload[key].get<long>();
}

Rational rational_from_json(const Json& j, const std::string& path) {
  const Scalar s = scalar_from_json(j, path);
  if (!s.is_rational()) throw SchemaError(path, "expected a rational coefficient");
  return s.rational();
}

HandlerResult cmd_chow_triple(const Json& payload) {
  const long c1 = payload_long(payload, "c1");
  const long c2 = payload_long(payload, "c2");
  if (!payload.contains("classes")) throw SchemaError("/classes", "missing required field");
  const Json& classes_json = payload["classes"];
  if (!classes_json.is_array() || classes_json.size() != 3)
    throw SchemaError("/classes", "expected an array of three degree-1 classes");
  std::array<ChowClass, 3> classes{ChowClass(c1, c2), ChowClass(c1, c2), ChowClass(c1, c2)};
  for (int i = 0; i < 3; ++i) {
    const std::string path = "/classes/" + std::to_string(i);
    const Json& cj = classes_json[i];
    if (!cj.is_object()) throw SchemaError(path, "expected an object with \"xi\" and \"A\"");
    if (cj.contains("xi")) classes[i].add_term(1, 0, rational_from_json(cj["xi"], path + "/xi"));
    if (cj.contains("A")) classes[i].add_term(0, 1, rational_from_json(cj["A"], path + "/A"));
    if (classes[i].is_zero())
      throw SchemaError(path, "class must have a nonzero xi or A coefficient");
  }
  HandlerResult out;
  out.result = Json{{"value", rational_to_json(pbundle_intersection(c1, c2, classes))}};
  out.citation =
      "In the intersection ring of the projectivization of a rank-2 bundle over the plane, "
      "the relative hyperplane class satisfies xi^2 = c1*xi*A - c2*A^2 with xi*A^2 = 1 and "
      "A^3 = 0.";
  return out;
}

HandlerResult cmd_chow_sarkisov(const Json&) {
  HandlerResult out;
  out.result = sarkisov_report_to_json(sarkisov_numerology());
  out.citation =
      "The double projection contracts a plane with normal sheaf of degree -1 after a flop, "
      "so K_Y^3 = K^3 - 6*K^2.G + 12*K.G^2 - 8*(G+)^3 = -40 and the half-anticanonical "
      "degree is H^3 = 5.";
  return out;
}

HandlerResult cmd_chow_quadric_link(const Json&) {
  HandlerResult out;
  out.result = quadric_report_to_json(quadric_link_divisors());
  out.citation =
      "Projection from a line factors through the blow-up along it, and the anticanonical "
      "class of the source equals twice the pushforward of Z' = q*H - 2E.";
  return out;
}

const std::map<std::string, Handler>& dispatch_table() {
  static const std::map<std::string, Handler> table{
      {"conic.invariants", cmd_conic_invariants},
      {"conic.solve", cmd_conic_solve},
      {"conic.polar", cmd_conic_polar},
      {"conic.parametrize", cmd_conic_parametrize},
      {"conic.descend", cmd_conic_descend},
      {"vsp.decompose", cmd_vsp_decompose},
      {"vsp.apolar-check", cmd_vsp_apolar_check},
      {"vsp.stratum", cmd_vsp_stratum},
      {"vsp.trisecant", cmd_vsp_trisecant},
      {"vsp.pullback", cmd_vsp_pullback},
      {"vsp.special-line", cmd_vsp_special_line},
      {"vsp.incidence", cmd_vsp_incidence},
      {"vsp.cylinders", cmd_vsp_cylinders},
      {"vsp.hilbert-point", cmd_vsp_hilbert_point},
      {"involution.classify", cmd_involution_classify},
      {"involution.verify-type1", cmd_involution_verify_type1},
      {"involution.length", cmd_involution_length},
      {"chow.triple", cmd_chow_triple},
      {"chow.sarkisov", cmd_chow_sarkisov},
      {"chow.quadric-link", cmd_chow_quadric_link},
  };
  return table;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, handler] : dispatch_table()) out.push_back(name);
  return out;
}

RunOutcome run_request(const Json& request) {
  Json response{{"version", "1"},    {"command", nullptr},  {"status", "ok"},
                {"result", nullptr}, {"certificate", nullptr}, {"citation", nullptr}};
  const auto fail = [&response](const std::string& status, const std::string& message,
                                const std::string& path, int code) {
    response["status"] = status;
    response["message"] = message;
    if (!path.empty()) response["path"] = path;
    return RunOutcome{response, code};
  };

  try {
    if (!request.is_object()) throw SchemaError("", "request must be a JSON object");
    if (!request.contains("command") || !request["command"].is_string())
      throw SchemaError("/command", "missing or non-string command");
    const std::string command = request["command"].get<std::string>();
    response["command"] = command;
    if (request.contains("version")) {
      const Json& v = request["version"];
      if (!v.is_string() || v.get<std::string>() != "1")
        throw SchemaError("/version", "unsupported envelope version (expected \"1\")");
    }
    Json payload = Json::object();
    if (request.contains("payload")) {
      if (!request["payload"].is_object())
        throw SchemaError("/payload", "payload must be a JSON object");
      payload = request["payload"];
    }

    const auto& table = dispatch_table();
    const auto it = table.find(command);
    if (it == table.end()) throw SchemaError("/command", "unknown command: " + command);

    const HandlerResult res = it->second(payload);
    response["status"] = res.status;
    response["result"] = res.result;
    response["certificate"] = res.certificate;
    response["citation"] = res.citation;
    return {response, res.status == "unsupported" ? 3 : 0};
  } catch (const SchemaError& e) {
    return fail("error", e.what(), e.path(), 2);
  } catch (const UnsupportedError& e) {
    return fail("unsupported", e.what(), "", 3);
  } catch (const ContractError& e) {
    return fail("error", e.what(), "", 2);
  }
}

RunOutcome run_batch(const Json& requests) {
  if (!requests.is_array()) {
    Json response{{"status", "error"},
                  {"message", "batch input must be a JSON array of requests"},
                  {"path", ""}};
    return {response, 2};
  }
  Json out = Json::array();
  bool any_error = false, any_unsupported = false;
  for (const Json& req : requests) {
    const RunOutcome one = run_request(req);
    out.push_back(one.response);
    if (one.exit_code == 2) any_error = true;
    if (one.exit_code == 3) any_unsupported = true;
  }
  return {out, any_error ? 2 : any_unsupported ? 3 : 0};
}

}  // namespace v5
