#include "veronese/io.hpp"

#include <charconv>

namespace veronese::io {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::parse, "not an integer: '" + std::string(s) + "'");
  return value;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::parse, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::parse, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const Json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorCode::parse, std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw Error(ErrorCode::parse, std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(Rational::parse(trim(part)));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

std::pair<int, int> parse_range(std::string_view text) {
  const auto pos = text.find("..");
  if (pos == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, pos));
  const int hi = parse_int(text.substr(pos + 2));
  if (lo > hi) throw Error(ErrorCode::parse, "empty range '" + std::string(text) + "'");
  return {lo, hi};
}

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(ErrorCode::parse, "rational must be a \"p/q\" string or an integer");
}

Instance instance_from_json(const Json& j) {
  Instance out;
  out.d = int_field(j, "d");
  std::vector<Rational> t;
  const Json& jt = field(j, "t");
  if (!jt.is_array()) throw Error(ErrorCode::parse, "\"t\" must be an array");
  for (const auto& x : jt) t.push_back(rational_from_json(x));
  const Json& jx = field(j, "xi");
  if (!jx.is_array()) throw Error(ErrorCode::parse, "\"xi\" must be an array");
  Vector xi(static_cast<Eigen::Index>(jx.size()));
  for (std::size_t i = 0; i < jx.size(); ++i) xi(static_cast<Eigen::Index>(i)) = rational_from_json(jx[i]);
  if (xi.size() != out.d + 1)
    throw Error(ErrorCode::dimension, "xi has " + std::to_string(xi.size()) + " entries, expected d + 1 = " +
                                          std::to_string(out.d + 1));
  out.t = GroundSet(std::move(t));
  out.xi = Chart(std::move(xi));
  return out;
}

Json to_json(const Instance& instance) {
  Json j;
  j["d"] = instance.d;
  j["t"] = Json::array();
  for (const auto& t : instance.t) j["t"].push_back(to_json(t));
  j["xi"] = Json::array();
  for (Eigen::Index i = 0; i < instance.xi.coords().size(); ++i) j["xi"].push_back(to_json(instance.xi.coords()(i)));
  return j;
}

Json to_json(const FacetComplex& f) {
  Json j;
  j["facets"] = Json::array();
  for (const auto& facet : f.facets()) j["facets"].push_back(facet);
  return j;
}

FacetComplex facets_from_json(const Json& j) {
  const Json& jf = field(j, "facets");
  if (!jf.is_array()) throw Error(ErrorCode::parse, "\"facets\" must be an array");
  std::vector<Facet> facets;
  int max_label = -1;
  for (const auto& x : jf) {
    facets.push_back(int_array(x, "facet"));
    for (int v : facets.back()) max_label = std::max(max_label, v);
  }
  if (facets.empty()) throw Error(ErrorCode::degenerate_complex, "complex has no facets");
  const int d = j.contains("d") ? int_field(j, "d") : static_cast<int>(facets.front().size());
  const int n = j.contains("n") ? int_field(j, "n") : max_label + 1;
  return FacetComplex(n, d, std::move(facets));
}

Json to_json(const SignedDecomposition& decomposition) {
  Json j;
  j["sizes"] = decomposition.sizes;
  j["first_sign"] = decomposition.first_sign;
  j["d"] = decomposition.d;
  return j;
}

SignedDecomposition decomposition_from_json(const Json& j) {
  const int first_sign = j.contains("first_sign") ? int_field(j, "first_sign") : 1;
  return SignedDecomposition(int_array(field(j, "sizes"), "\"sizes\""), first_sign, int_field(j, "d"));
}

Json to_json(const CircularComposition& c) {
  Json j;
  j["d"] = c.d();
  j["arcs"] = c.arcs();
  if (c.dividers() == 0) j["dividers"] = 0;
  return j;
}

CircularComposition composition_from_json(const Json& j) {
  std::optional<int> dividers;
  if (j.contains("dividers")) dividers = int_field(j, "dividers");
  return CircularComposition(int_field(j, "d"), int_array(field(j, "arcs"), "\"arcs\""), dividers);
}

Json to_json(const S123Decomposition& s) {
  Json j;
  j["S1"] = s.s1;
  j["S2"] = s.s2;
  j["S3"] = Json::array();
  for (const auto& [a, b] : s.s3) j["S3"].push_back({a, b});
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["vertices"] = c.vertices;
  j["facets"] = c.facets;
  j["simplex"] = c.simplex;
  j["cross"] = c.cross;
  j["stacked_family"] = c.stacked_family;
  j["cyclic"] = c.cyclic;
  j["neighbourly"] = c.neighbourly;
  return j;
}

Json to_json(const TypeFlags& flags) {
  Json j;
  j["simplex"] = flags.simplex;
  j["cross"] = flags.cross;
  j["stacked_family"] = flags.stacked_family;
  j["cyclic"] = flags.cyclic;
  j["neighbourly"] = flags.neighbourly;
  return j;
}

Json to_json(const TableRow& row) {
  Json j;
  j["d"] = row.d;
  j["n"] = row.n;
  j["count"] = row.count();
  j["types"] = Json::array();
  for (const auto& type : row.types) {
    Json t;
    t["arcs"] = type.representative.arcs();
    if (type.representative.dividers() == 0) t["dividers"] = 0;
    t["certificate"] = type.certificate.hex();
    t["flags"] = to_json(type.flags);
    j["types"].push_back(std::move(t));
  }
  return j;
}

std::string csv_line(const TableRow& row) {
  return std::to_string(row.d) + "," + std::to_string(row.n) + "," + std::to_string(row.count());
}

Json error_json(ErrorCode code, const std::string& message, Json context) {
  Json j;
  j["error"] = std::string(to_string(code));
  j["message"] = message;
  j["context"] = std::move(context);
  return j;
}

}  // namespace veronese::io
