#include "starconf/json_io.hpp"

#include <cctype>
#include <sstream>

namespace starconf {

namespace {

std::string exponent_key(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

Exponent parse_exponent_key(const std::string& key) {
  Exponent e;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw Error("malformed exponent key '" + key + "'");
    e.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  if (e.empty()) throw Error("empty exponent key");
  return e;
}

}  // namespace

Json to_json(const PointSet& x) {
  Json out;
  out["n"] = x.ambient_dim();
  out["points"] = Json::array();
  for (const auto& p : x) out["points"].push_back(to_json(p));
  return out;
}

Json to_json(const PointSet& x, std::span<const Hyperplane> hyperplanes) {
  Json out = to_json(x);
  out["hyperplanes"] = Json::array();
  for (const auto& h : hyperplanes) out["hyperplanes"].push_back(to_json(h));
  return out;
}

Json to_json(const ContactStar& star) {
  Json out;
  out["n"] = star.curve.n();
  out["params"] = Json::array();
  for (const auto& t : star.params) out["params"].push_back(to_json(t));
  out["hyperplanes"] = Json::array();
  for (const auto& h : star.hyperplanes) out["hyperplanes"].push_back(to_json(h));
  out["points"] = Json::array();
  for (const auto& p : star.points) out["points"].push_back(to_json(p));
  return out;
}

Json to_json(const HVector& h) {
  Json out;
  out["h"] = h.h;
  out["degree"] = h.degree();
  return out;
}

Json to_json(const HilbertTable& table) {
  Json out = to_json(table.h);
  out["hilbert"] = table.values;
  return out;
}

Json to_json(const HomForm& f) {
  Json out;
  out["degree"] = f.degree();
  out["vars"] = f.num_vars();
  Json terms = Json::object();
  for (const auto& [e, c] : f.terms()) terms[exponent_key(e)] = to_string(c);
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const CICertificate& cert) {
  Json out;
  out["type"] = {cert.type.a, cert.type.b};
  out["F"] = to_json(cert.F);
  out["G"] = to_json(cert.G);
  out["verified"] = cert.verified;
  return out;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& v : m.row(i)) row.push_back(to_string(v));
    out.push_back(std::move(row));
  }
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("expected a rational, got " + j.dump());
}

ProjPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() < 2) throw Error("expected a coordinate array, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return ProjPoint(std::span<const Rational>(c));
}

Hyperplane hyperplane_from_json(const Json& j) {
  const ProjPoint p = point_from_json(j);
  return Hyperplane(std::span<const Integer>(p.coords()));
}

PointSet point_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points")) throw Error("expected an object with \"points\"");
  std::vector<ProjPoint> pts;
  for (const auto& p : j.at("points")) pts.push_back(point_from_json(p));
  std::size_t n = 2;
  if (j.contains("n")) {
    n = j.at("n").get<std::size_t>();
  } else if (!pts.empty()) {
    n = pts.front().dim();
  }
  return PointSet(n, std::move(pts));
}

FatScheme fat_scheme_from_json(const Json& j) {
  const PointSet x = point_set_from_json(j);
  if (!j.contains("multiplicities")) return FatScheme::reduced(x);
  // Multiplicities follow the input order, not the sorted set order.
  const auto& mults = j.at("multiplicities");
  const auto& raw = j.at("points");
  if (!mults.is_array() || mults.size() != raw.size()) throw Error("\"multiplicities\" must parallel \"points\"");
  FatScheme z(x.ambient_dim());
  for (std::size_t i = 0; i < raw.size(); ++i) z.add(point_from_json(raw[i]), mults[i].get<unsigned>());
  return z;
}

std::vector<Hyperplane> hyperplanes_from_json(const Json& j) {
  std::vector<Hyperplane> out;
  if (j.contains("hyperplanes"))
    for (const auto& h : j.at("hyperplanes")) out.push_back(hyperplane_from_json(h));
  return out;
}

HomForm form_from_json(const Json& j) {
  const unsigned degree = j.at("degree").get<unsigned>();
  const auto& terms = j.at("terms");
  std::size_t vars = j.contains("vars") ? j.at("vars").get<std::size_t>() : 0;
  if (vars == 0) {
    if (terms.empty()) throw Error("form without terms needs \"vars\"");
    vars = parse_exponent_key(terms.begin().key()).size();
  }
  HomForm f(vars, degree);
  for (const auto& [key, value] : terms.items()) {
    const Exponent e = parse_exponent_key(key);
    if (e.size() != vars) throw Error("exponent key '" + key + "' has the wrong length");
    f.add_term(e, rational_from_json(value));
  }
  return f;
}

}  // namespace starconf

namespace starconf {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

}  // namespace

Hyperplane parse_linear_form(std::string_view text, std::size_t n) {
  static const std::string names = "xyztw";
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error("empty linear form");
  std::vector<Rational> coeffs(n + 1);
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    Rational c = j > i ? parse_rational(s.substr(i, j - i)) : Rational(1);
    i = j;
    if (i < s.size() && s[i] == '*') ++i;
    if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
      throw Error("malformed linear form '" + std::string(text) + "'");
    std::size_t var;
    const char name = s[i++];
    if (name == 'x' && i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t k = i;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      var = std::stoul(s.substr(i, k - i));
      i = k;
    } else {
      const auto pos = names.find(name);
      if (pos == std::string::npos) throw Error(std::string("unknown variable '") + name + "'");
      var = pos;
    }
    if (var > n) throw Error("variable out of range in '" + std::string(text) + "'");
    coeffs[var] += sign * c;
  }
  return Hyperplane(std::span<const Rational>(coeffs));
}

ProjPoint parse_point(std::string_view text) {
  const auto values = parse_rational_list(text);
  if (values.size() < 2) throw Error("a point needs at least two coordinates: '" + std::string(text) + "'");
  return ProjPoint(std::span<const Rational>(values));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& part : split(strip_spaces(text), ',')) {
    if (part.empty()) throw Error("empty entry in list '" + std::string(text) + "'");
    out.push_back(parse_rational(part));
  }
  return out;
}

}  // namespace starconf
