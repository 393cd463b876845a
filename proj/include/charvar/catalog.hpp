#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/numfield.hpp"
#include "charvar/tracealg.hpp"

namespace charvar {

enum class ComponentId { X11, X12, X21, X22, X3, X4, X51, X52, X61, X62 };

inline constexpr std::array<ComponentId, 10> kAllComponents{
    ComponentId::X11, ComponentId::X12, ComponentId::X21, ComponentId::X22, ComponentId::X3,
    ComponentId::X4,  ComponentId::X51, ComponentId::X52, ComponentId::X61, ComponentId::X62};

const char* to_string(ComponentId id) noexcept;
std::optional<ComponentId> parse_component(std::string_view name) noexcept;

/// Image under the quarter-turn symmetry: X_{i,1} <-> X_{i,2}; X3, X4 fixed.
ComponentId rotation_partner(ComponentId id) noexcept;

struct Param {
  std::string name;
  Complex value;
};

struct ComponentSample {
  ComponentId id;
  int branch;  // position in the deterministic branch enumeration
  std::vector<Param> params;
  TraceVector vector;

  Complex param(std::string_view name) const;
};

/// Sampler margin around excluded parameter values.
inline constexpr double kSamplerMargin = 1e-3;

/// Whether the sampler accepts t for this component (excluded values avoided
/// by `margin`).
bool admissible(ComponentId id, Complex t, double margin = kSamplerMargin) noexcept;

/// Every branch of the component at t. Throws ExcludedParameter when t is
/// not admissible.
std::vector<ComponentSample> sample_component(ComponentId id, Complex t);

struct NamedResidual {
  std::string name;
  Residual value;
};

/// Defining equalities of the component's closure evaluated at v, with
/// denominators cleared. Parameters are read off linearly from v.
std::vector<NamedResidual> membership_residual(ComponentId id, const TraceVector& v);
/// Largest normalized membership residual.
double membership_max(ComponentId id, const TraceVector& v);

/// Name of the first exclusion condition that v comes within `margin` of,
/// if any.
std::optional<std::string> exclusion_violation(ComponentId id, const TraceVector& v,
                                               double margin = 1e-6);

struct CensusReport {
  std::vector<ComponentSample> samples;  // deduplicated, in component order
  std::array<int, 10> counts{};
  int total = 0;
};

/// All characters at t = 2, deduplicated at 1e-8.
CensusReport enumerate_parabolic();

/// The quartic in u cutting out the closure of X4 at fixed t.
PolyLE4 excellent_quartic(Complex t);

struct SpecialPoint {
  std::string label;
  Complex t, u, eta;
  TraceVector vector;
};

std::vector<SpecialPoint> special_points();

/// The X4 point with the given (t, u, eta).
TraceVector x4_vector(Complex t, Complex u, Complex eta) noexcept;

}  // namespace charvar
