#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "charvar/catalog.hpp"
#include "charvar/random.hpp"

namespace charvar {

struct IdentityReport {
  int n = 0;
  bool fault_injected = false;
  double type1 = 0.0;         // largest normalized type I residual
  double type2 = 0.0;
  double det_diamond = 0.0;
  double cayley_hamilton = 0.0;
  double xyx = 0.0;
  double anticommutator = 0.0;
  int pairs = 0;              // pairs checked by both irreducibility tests
  int oracle_disagreements = 0;
  bool pass = true;
};

inline constexpr double kRelationTol = 1e-8;
inline constexpr double kMatrixIdentityTol = 1e-10;

/// Item k draws t (|t| <= 3) and a quadruple in G(t)^4 from rng_stream(seed, k)
/// and checks the universal identities on it. Each item also compares the
/// trace criterion for pair irreducibility against the eigenvector test, once
/// on a random pair and once on a constructed reducible pair. With
/// `inject_fault`, s12 is perturbed by 1e-3 before the relations are evaluated.
IdentityReport identity_battery(std::uint64_t seed, int n, bool inject_fault = false,
                                Exec exec = Exec::Parallel);

/// Pair in G(t) with a common eigenvector, conjugated by a random element.
std::pair<Mat2, Mat2> random_reducible_pair(Rng& rng, Complex t);

struct SoundnessRow {
  ComponentId id;
  int t_values = 0;
  int samples = 0;
  double relator = 0.0;         // largest is_representation residual
  double trace_equations = 0.0;
  double redundant = 0.0;       // largest tr3 residual
  double membership = 0.0;
  int failures = 0;             // samples that did not realize or failed a bound
};

inline constexpr double kRelatorTol = 1e-7;
inline constexpr double kTraceEquationTol = 1e-8;
inline constexpr double kMembershipTol = 1e-10;

/// Random t with |t| in [0.2, 3], admissible for id with a 0.05 margin.
Complex random_admissible_t(ComponentId id, Rng& rng);

/// For each component, `t_values` random admissible t from
/// rng_stream(seed, 1000 * component + k): sample, realize, and check relators,
/// trace equations, the redundant equation and membership.
std::vector<SoundnessRow> soundness_sweep(std::span<const ComponentId> ids, int t_values,
                                          std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace charvar
