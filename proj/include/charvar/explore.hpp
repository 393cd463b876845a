#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charvar/catalog.hpp"

namespace charvar {

/// The system solved by the probe at fixed t: 12 trace equations, 4 type II
/// and 16 type I relations in the 10 unknown trace coordinates.
std::array<Residual, 32> explore_system(const TraceVector& v) noexcept;

struct NewtonResult {
  TraceVector vector;
  int iterations;
  double residual;  // largest normalized entry of explore_system
  bool converged;
};

inline constexpr double kExploreTol = 1e-9;
inline constexpr int kExploreMaxIter = 100;

/// Damped Gauss-Newton (Levenberg-Marquardt) on explore_system; t is held fixed.
NewtonResult newton_solve(const TraceVector& start, int max_iter = kExploreMaxIter);

struct Classification {
  std::string label;  // component name, "reducible", "non-representation" or "unclassified"
  double membership;  // smallest membership residual over the ten components
};

inline constexpr double kClassifyTol = 1e-5;

/// Component with the smallest membership residual when it is below 1e-5.
/// Otherwise the abelian (reducible) character, points that do not realize
/// to a representation, or "unclassified".
Classification classify(const TraceVector& v);

struct ExplorePoint {
  int attempt;
  int iterations;
  TraceVector vector;
  Classification cls;
};

struct ExploreReport {
  Complex t;
  std::uint64_t seed;
  int attempts;
  std::vector<ExplorePoint> converged;  // ordered by attempt
  std::map<std::string, int> histogram;
};

/// Runs `attempts` Newton solves from random starts; attempt k draws its start
/// from rng_stream(seed, k). Throws ExcludedParameter when t is excluded for
/// some component.
ExploreReport explore_solve(Complex t, std::uint64_t seed, int attempts, Exec exec = Exec::Parallel);

}  // namespace charvar
