#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "veronese/circular.hpp"
#include "veronese/classify.hpp"
#include "veronese/enumerate.hpp"
#include "veronese/error.hpp"
#include "veronese/facet_complex.hpp"
#include "veronese/geometry.hpp"
#include "veronese/line.hpp"

namespace veronese::io {

using Json = nlohmann::ordered_json;

/// Comma separated rationals ("p", "-p" or "p/q").
std::vector<Rational> parse_rational_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);
/// "a..b" inclusive, or a single integer.
std::pair<int, int> parse_range(std::string_view text);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

struct Instance {
  int d = 0;
  GroundSet t;
  Chart xi;
};

/// {"d", "t": [...], "xi": [...]}; xi must have d + 1 entries.
Instance instance_from_json(const Json& j);
Json to_json(const Instance& instance);

Json to_json(const FacetComplex& f);
/// {"facets": [[...]]} with optional "n" (label count) and "d".
FacetComplex facets_from_json(const Json& j);

Json to_json(const SignedDecomposition& decomposition);
SignedDecomposition decomposition_from_json(const Json& j);

Json to_json(const CircularComposition& c);
CircularComposition composition_from_json(const Json& j);

Json to_json(const S123Decomposition& s);
Json to_json(const Classification& c);
Json to_json(const TypeFlags& flags);
Json to_json(const TableRow& row);

/// "d,n,count" without trailing newline.
std::string csv_line(const TableRow& row);

Json error_json(ErrorCode code, const std::string& message, Json context = Json::object());

}  // namespace veronese::io
