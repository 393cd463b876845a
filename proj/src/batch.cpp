#include "charvar/batch.hpp"

#include <algorithm>
#include <optional>

#include "charvar/reconstruct.hpp"
#include "charvar/wirtinger.hpp"

namespace charvar {

std::pair<Mat2, Mat2> random_reducible_pair(Rng& rng, Complex t) {
  const Complex k = 0.5 * (t + principal_sqrt(t * t - 4.0));
  const Complex ki = 1.0 / k;
  const Mat2 x{k, random_complex(rng, 1.5), 0.0, ki};
  // Same or swapped diagonal: tr(xy) = t^2 - 2 or 2 up to the upper entries.
  const bool swap = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  const Mat2 y = swap ? Mat2{ki, random_complex(rng, 1.5), 0.0, k} : Mat2{k, random_complex(rng, 1.5), 0.0, ki};
  const Mat2 g = random_sl2(rng);
  const Mat2 gi = inverse(g);
  return {g * x * gi, g * y * gi};
}

namespace {

IdentityReport identity_item(std::uint64_t seed, int k, bool fault) {
  Rng rng = rng_stream(seed, static_cast<std::uint64_t>(k));
  const Complex t = random_complex(rng, 3.0);
  const Quadruple q = random_quadruple(rng, t);
  IdentityReport r;
  r.n = 1;

  SCoords s = s_from_t(trace_vector_of(q));
  if (fault) s.s12 += 1e-3;
  r.type1 = max_normalized(typeI_residuals(s));
  r.type2 = max_normalized(typeII_residuals(s));
  r.det_diamond = det_Sdiamond(s).normalized();

  const GtElement x1(q.x(1)), x2(q.x(2));
  const double sc = std::max(1.0, q.scale());
  r.cayley_hamilton = ch_residual(x1).norm() / (sc * sc);
  r.xyx = xyx_expand(x1, x2).norm() / (sc * sc * sc);
  r.anticommutator = anticommutator_residual(traceless_part(x1), traceless_part(x2)).norm() / (sc * sc);

  auto agree = [](const Mat2& a, const Mat2& b) {
    const std::array<Mat2, 2> pair{a, b};
    return is_irreducible_pair(GtElement(a), GtElement(b)) == !has_common_eigenvector(pair);
  };
  const auto [p, pq] = random_reducible_pair(rng, t);
  r.pairs = 2;
  r.oracle_disagreements = (agree(q.x(3), q.x(4)) ? 0 : 1) + (agree(p, pq) ? 0 : 1);
  return r;
}

void merge(IdentityReport& into, const IdentityReport& r) {
  into.n += r.n;
  into.type1 = std::max(into.type1, r.type1);
  into.type2 = std::max(into.type2, r.type2);
  into.det_diamond = std::max(into.det_diamond, r.det_diamond);
  into.cayley_hamilton = std::max(into.cayley_hamilton, r.cayley_hamilton);
  into.xyx = std::max(into.xyx, r.xyx);
  into.anticommutator = std::max(into.anticommutator, r.anticommutator);
  into.pairs += r.pairs;
  into.oracle_disagreements += r.oracle_disagreements;
}

template <class Item, class Fn>
std::vector<Item> run_items(int n, Exec exec, Fn fn) {
  std::vector<Item> items(static_cast<std::size_t>(std::max(n, 0)));
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) items[static_cast<std::size_t>(k)] = fn(k);
  } else {
    for (int k = 0; k < n; ++k) items[static_cast<std::size_t>(k)] = fn(k);
  }
  return items;
}

}  // namespace

IdentityReport identity_battery(std::uint64_t seed, int n, bool inject_fault, Exec exec) {
  const auto items = run_items<IdentityReport>(n, exec, [&](int k) { return identity_item(seed, k, inject_fault); });
  IdentityReport rep;
  rep.fault_injected = inject_fault;
  for (const IdentityReport& r : items) merge(rep, r);
  rep.pass = rep.type1 <= kRelationTol && rep.type2 <= kRelationTol && rep.det_diamond <= kRelationTol &&
             rep.cayley_hamilton <= kMatrixIdentityTol && rep.xyx <= kMatrixIdentityTol &&
             rep.anticommutator <= kMatrixIdentityTol && rep.oracle_disagreements == 0;
  return rep;
}

Complex random_admissible_t(ComponentId id, Rng& rng) {
  for (;;) {
    const Complex t = random_annulus(rng, 0.2, 3.0);
    if (admissible(id, t, 0.05)) return t;
  }
}

namespace {

SoundnessRow soundness_item(ComponentId id, std::uint64_t seed, int k) {
  Rng rng = rng_stream(seed, 1000u * static_cast<std::uint64_t>(id) + static_cast<std::uint64_t>(k));
  const Complex t = random_admissible_t(id, rng);
  SoundnessRow row{id};
  row.t_values = 1;
  std::vector<ComponentSample> samples;
  try {
    samples = sample_component(id, t);
  } catch (const Error&) {
    row.failures = 1;
    row.relator = std::numeric_limits<double>::infinity();
  }
  for (const ComponentSample& s : samples) {
    ++row.samples;
    const double tr = max_normalized(trace_equation_residuals(s.vector));
    const double tr3 = max_normalized(tr3_residuals(s.vector));
    const double mem = membership_max(id, s.vector);
    row.trace_equations = std::max(row.trace_equations, tr);
    row.redundant = std::max(row.redundant, tr3);
    row.membership = std::max(row.membership, mem);
    double rel = std::numeric_limits<double>::infinity();
    try {
      rel = is_representation(realize_character(s.vector).quadruple).residual;
      row.relator = std::max(row.relator, rel);
    } catch (const Error&) {
      row.relator = std::numeric_limits<double>::infinity();
    }
    if (!(rel <= kRelatorTol) || tr > kTraceEquationTol || tr3 > kTraceEquationTol || mem > kMembershipTol)
      ++row.failures;
  }
  return row;
}

}  // namespace

std::vector<SoundnessRow> soundness_sweep(std::span<const ComponentId> ids, int t_values,
                                          std::uint64_t seed, Exec exec) {
  const int per = std::max(t_values, 0);
  const int total = static_cast<int>(ids.size()) * per;
  const auto items = run_items<std::optional<SoundnessRow>>(total, exec, [&](int j) {
    return std::optional<SoundnessRow>(soundness_item(ids[static_cast<std::size_t>(j / per)], seed, j % per));
  });
  std::vector<SoundnessRow> rows;
  for (ComponentId id : ids) rows.push_back(SoundnessRow{id});
  for (int j = 0; j < total; ++j) {
    const SoundnessRow& r = *items[static_cast<std::size_t>(j)];
    SoundnessRow& into = rows[static_cast<std::size_t>(j / per)];
    into.t_values += r.t_values;
    into.samples += r.samples;
    into.relator = std::max(into.relator, r.relator);
    into.trace_equations = std::max(into.trace_equations, r.trace_equations);
    into.redundant = std::max(into.redundant, r.redundant);
    into.membership = std::max(into.membership, r.membership);
    into.failures += r.failures;
  }
  return rows;
}

}  // namespace charvar
