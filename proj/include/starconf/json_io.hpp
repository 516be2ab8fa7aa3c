#pragma once

// JSON encodings. Integers and rationals are written as strings so that no
// precision is lost; readers also accept plain JSON integers.

#include <json.hpp>

#include "starconf/certificates.hpp"
#include "starconf/hilbert.hpp"
#include "starconf/projective.hpp"
#include "starconf/rnc.hpp"

namespace starconf {

using Json = nlohmann::ordered_json;

template <class Tag>
Json to_json(const ProjVector<Tag>& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(to_string(c));
  return out;
}

Json to_json(const PointSet& x);
Json to_json(const PointSet& x, std::span<const Hyperplane> hyperplanes);
Json to_json(const ContactStar& star);
Json to_json(const HVector& h);
Json to_json(const HilbertTable& table);
Json to_json(const HomForm& f);
Json to_json(const CICertificate& cert);
Json to_json(const RatMatrix& m);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
ProjPoint point_from_json(const Json& j);
Hyperplane hyperplane_from_json(const Json& j);
/// {"n": 2, "points": [...]}; n defaults to the coordinate count minus one.
PointSet point_set_from_json(const Json& j);
/// A point set, optionally with "multiplicities" parallel to "points".
FatScheme fat_scheme_from_json(const Json& j);
std::vector<Hyperplane> hyperplanes_from_json(const Json& j);
HomForm form_from_json(const Json& j);

}  // namespace starconf

namespace starconf {

/// Linear form such as "x+y-z" or "2x - 3/2 t" in the variables
/// x, y, z, t, w (or x0, x1, ...), read as a hyperplane of P^n.
Hyperplane parse_linear_form(std::string_view text, std::size_t n);
/// "1,1,2,0".
ProjPoint parse_point(std::string_view text);
/// Comma-separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace starconf
