#include "charvar/json_io.hpp"

#include <charconv>
#include <cstdio>
#include <string>

namespace charvar {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(Errc::InvalidArgument, "complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const TraceVector& v) {
  Json j = Json::object();
  const auto a = v.as_array();
  for (std::size_t k = 0; k < a.size(); ++k) j[TraceVector::kNames[k]] = complex_to_json(a[k]);
  return j;
}

TraceVector trace_vector_from_json(const Json& j) {
  std::array<Complex, 11> a;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!j.contains(TraceVector::kNames[k]))
      throw Error(Errc::InvalidArgument, std::string("missing coordinate ") + TraceVector::kNames[k]);
    a[k] = complex_from_json(j.at(TraceVector::kNames[k]));
  }
  return TraceVector::from_array(a);
}

Json to_json(const ComponentSample& s) {
  Json params = Json::object();
  for (const Param& p : s.params) params[p.name] = complex_to_json(p.value);
  Json res = Json::object();
  for (const NamedResidual& r : membership_residual(s.id, s.vector)) res[r.name] = r.value.magnitude();
  return Json{{"id", to_string(s.id)}, {"branch", s.branch}, {"params", params},
              {"vector", to_json(s.vector)}, {"residuals", res}};
}

Json to_json(const Quadruple& q) {
  Json j = Json::object();
  for (int i = 1; i <= 4; ++i) {
    const Mat2& x = q.x(i);
    j["x" + std::to_string(i)] = Json::array({Json::array({complex_to_json(x.a), complex_to_json(x.b)}),
                                              Json::array({complex_to_json(x.c), complex_to_json(x.d)})});
  }
  return j;
}

namespace {

std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Coefficient of i: "" / "+" / "-" mean +-1.
std::optional<double> parse_imag(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s);
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    if (auto r = parse_real(text)) return Complex(*r, 0.0);
    return std::nullopt;
  }
  text.remove_suffix(1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (auto im = parse_imag(text)) return Complex(0.0, *im);
    return std::nullopt;
  }
  const auto re = parse_real(text.substr(0, split));
  const auto im = parse_imag(text.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace charvar
