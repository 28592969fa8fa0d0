#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "v5/chow.hpp"
#include "v5/conic.hpp"
#include "v5/error.hpp"
#include "v5/involution.hpp"
#include "v5/matrix.hpp"
#include "v5/projective.hpp"
#include "v5/report.hpp"
#include "v5/scalar.hpp"
#include "v5/ternary.hpp"
#include "v5/vsp.hpp"

namespace v5 {

using Json = nlohmann::json;

/// Contract violation in user-supplied JSON, carrying the JSON-pointer path
/// of the offending field.
class SchemaError : public ContractError {
 public:
  SchemaError(std::string path, const std::string& message)
      : ContractError(message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// --- scalars and coordinate vectors ---------------------------------------

/// Canonical string form of a scalar (integers as "p", fractions as "p/q"
/// with q > 0 and gcd(p, q) = 1, quadratic elements as "(p+q√d)/r",
/// rational functions as "(num)/(den)").
Json scalar_to_json(const Scalar& s);
/// Accepts a canonical (or any parsable) scalar string or a JSON integer.
Scalar scalar_from_json(const Json& j, const std::string& path);

/// A rational as a JSON integer when integral and small enough, else as a
/// canonical string.
Json rational_to_json(const Rational& r);

Json triple_to_json(const std::array<Scalar, 3>& v);
std::array<Scalar, 3> triple_from_json(const Json& j, const std::string& path);

Json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j, const std::string& path);
Json line_to_json(const ProjLine& l);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& path, int rows = -1, int cols = -1);

// --- forms and schemes ------------------------------------------------------

Json form_to_json(const QuadraticForm& f);
/// Reads a quadratic form from a payload carrying either "gram" (3x3 rows)
/// or "form" (a homogeneous degree-2 polynomial string).
QuadraticForm form_from_payload(const Json& payload, const std::string& path_base);

/// Parses a polynomial string field.
TernaryForm ternary_from_json(const Json& j, const std::string& path);

Json scheme_to_json(const LengthThreeScheme& z);
/// Tagged variant: {"kind": "reduced", "points": [...]} |
/// {"kind": "double-plus-one", "point", "direction", "second_point"} |
/// {"kind": "curvilinear", "point", "direction", "second_order"?}.
LengthThreeScheme scheme_from_json(const Json& j, const std::string& path);

Json pluecker_to_json(const PlueckerLine& l);
/// Requires "coordinates" (10 scalars) and either "basis" (5x6 rows) or
/// "basis_id" (as produced by PlueckerLine::basis_id).
PlueckerLine pluecker_from_json(const Json& j, const std::string& path);

// --- certificates and reports ----------------------------------------------

Json certificate_to_json(const PointCertificate& c);
Json parametrization_to_json(const ConicParametrization& p);
Json cylinder_report_to_json(const CylinderReport& r);
Json identities_to_json(const std::vector<LatticeIdentity>& ids);
Json typei_report_to_json(const TypeIReport& r);
Json sarkisov_report_to_json(const SarkisovReport& r);
Json quadric_report_to_json(const QuadricLinkReport& r);

std::string stratum_name(StratumClass s);
std::string involution_type_name(InvolutionType t);

}  // namespace v5
