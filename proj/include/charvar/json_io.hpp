#pragma once

#include <optional>
#include <string_view>

#include <json.hpp>

#include "charvar/catalog.hpp"
#include "charvar/quadruple.hpp"
#include "charvar/tracealg.hpp"

namespace charvar {

using Json = nlohmann::ordered_json;

/// [re, im]
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// Object keyed by coordinate name, values [re, im].
Json to_json(const TraceVector& v);
TraceVector trace_vector_from_json(const Json& j);

/// {"id", "params": {name: [re, im]}, "vector", "residuals": {name: magnitude}}
Json to_json(const ComponentSample& s);

/// {"x1": [[a, b], [c, d]], ...} with entries [re, im].
Json to_json(const Quadruple& q);

/// Parses "a+bi" style literals: "3", "-2.5", "1+2i", "0.5-i", "i", "-3i",
/// "1e-3+2e-2i". Returns nullopt on anything else.
std::optional<Complex> parse_complex(std::string_view text);
std::string format_complex(Complex z);

}  // namespace charvar
