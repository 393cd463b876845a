#include "charvar/explore.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "charvar/random.hpp"
#include "charvar/reconstruct.hpp"
#include "charvar/wirtinger.hpp"

namespace charvar {

std::array<Residual, 32> explore_system(const TraceVector& v) noexcept {
  std::array<Residual, 32> out;
  const auto tr = trace_equation_residuals(v);
  const SCoords s = s_from_t(v);
  const auto t2 = typeII_residuals(s);
  const auto t1 = typeI_residuals(s);
  std::copy(tr.begin(), tr.end(), out.begin());
  std::copy(t2.begin(), t2.end(), out.begin() + 12);
  std::copy(t1.begin(), t1.end(), out.begin() + 16);
  return out;
}

namespace {

using VecX = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using MatX = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// Unknown coordinates of a chart: either all ten, or the six pair traces with
// every s_ijk held at zero.
struct Chart {
  Complex t;
  bool flat;

  int dim() const { return flat ? 6 : 10; }

  VecX coords(const TraceVector& v) const {
    const auto a = v.as_array();
    VecX x(dim());
    for (int k = 0; k < dim(); ++k) x(k) = a[k + 1];
    return x;
  }

  TraceVector vector(const VecX& x) const {
    std::array<Complex, 11> a{};
    a[0] = t;
    for (int k = 0; k < dim(); ++k) a[k + 1] = x(k);
    TraceVector v = TraceVector::from_array(a);
    if (flat) {
      const Complex h = 0.5 * t, c = 0.5 * t * t * t;
      v.t123 = h * (v.t12 + v.t23 + v.t13) - c;
      v.t124 = h * (v.t12 + v.t24 + v.t14) - c;
      v.t134 = h * (v.t13 + v.t34 + v.t14) - c;
      v.t234 = h * (v.t23 + v.t34 + v.t24) - c;
    }
    return v;
  }
};

VecX values(const TraceVector& v) {
  const auto rs = explore_system(v);
  VecX r(32);
  for (int k = 0; k < 32; ++k) r(k) = rs[k].value();
  return r;
}

double worst(const TraceVector& v) { return max_normalized(explore_system(v)); }

// The system is holomorphic, so a real-direction central difference gives the
// complex derivative.
MatX jacobian(const Chart& ch, const VecX& x) {
  MatX J(32, ch.dim());
  for (int k = 0; k < ch.dim(); ++k) {
    const double h = 1e-6 * std::max(1.0, std::abs(x(k)));
    VecX xp = x, xm = x;
    xp(k) += h;
    xm(k) -= h;
    J.col(k) = (values(ch.vector(xp)) - values(ch.vector(xm))) / (2.0 * h);
  }
  return J;
}

constexpr int kPolishSteps = 10;

NewtonResult levenberg_marquardt(const Chart& ch, const TraceVector& start, int max_iter) {
  VecX x = ch.coords(start);
  VecX r = values(ch.vector(x));
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  NewtonResult res{ch.vector(x), 0, worst(ch.vector(x)), false};
  // Iteration continues past the residual test for a few polishing steps.
  int polish = 0;
  for (int it = 0; it < max_iter; ++it) {
    const MatX J = jacobian(ch, x);
    const MatX JhJ = J.adjoint() * J;
    const VecX g = J.adjoint() * r;
    const double diag = JhJ.diagonal().real().maxCoeff();
    bool accepted = false;
    double step_norm = 0.0;
    for (int tries = 0; tries < 12 && !accepted; ++tries) {
      MatX A = JhJ;
      A.diagonal().array() += lambda * std::max(diag, 1e-12);
      const VecX step = A.ldlt().solve(-g);
      const VecX xn = x + step;
      if (!xn.allFinite()) break;
      const VecX rn = values(ch.vector(xn));
      const double cn = rn.squaredNorm();
      if (std::isfinite(cn) && cn < cost) {
        x = xn;
        r = rn;
        cost = cn;
        step_norm = step.norm();
        lambda = std::max(lambda / 10.0, 1e-15);
        accepted = true;
      } else {
        lambda *= 10.0;
      }
    }
    if (!accepted) break;
    res.iterations = it + 1;
    res.vector = ch.vector(x);
    res.residual = worst(res.vector);
    if (res.residual <= kExploreTol &&
        (step_norm <= 1e-13 * std::max(1.0, x.norm()) || ++polish >= kPolishSteps))
      break;
  }
  res.converged = res.residual <= kExploreTol;
  return res;
}

constexpr double kFlatTol = 1e-3;

}  // namespace

NewtonResult newton_solve(const TraceVector& start, int max_iter) {
  NewtonResult res = levenberg_marquardt(Chart{start.t, false}, start, max_iter);
  if (!res.converged) return res;
  // Solutions with every s_ijk = 0 are singular for the full system (the type I
  // relations are quadratic in s_ijk), so the iteration stalls near them.
  // Re-solve on that stratum, where the reduced system is regular.
  const SCoords s = s_from_t(res.vector);
  const double smax = std::max({std::abs(s.s123), std::abs(s.s124), std::abs(s.s134), std::abs(s.s234)});
  if (smax > kFlatTol * std::max(1.0, res.vector.max_abs())) return res;
  const int budget = std::max(1, max_iter - res.iterations);
  NewtonResult flat = levenberg_marquardt(Chart{start.t, true}, res.vector, budget);
  if (flat.converged && flat.residual <= res.residual * 10.0 + 1e-15) {
    flat.iterations += res.iterations;
    return flat;
  }
  return res;
}

namespace {

bool is_abelian(const TraceVector& v) {
  const Complex p = v.t * v.t - 2.0, q = v.t * v.t * v.t - 3.0 * v.t;
  const double tol = 1e-6 * std::max(1.0, v.max_abs());
  for (Complex z : {v.t12, v.t23, v.t34, v.t14, v.t13, v.t24})
    if (std::abs(z - p) > tol) return false;
  for (Complex z : {v.t123, v.t124, v.t134, v.t234})
    if (std::abs(z - q) > tol) return false;
  return true;
}

}  // namespace

Classification classify(const TraceVector& v) {
  Classification best{"unclassified", std::numeric_limits<double>::infinity()};
  for (ComponentId id : kAllComponents) {
    const double m = membership_max(id, v);
    if (m < best.membership) {
      best.membership = m;
      if (m <= kClassifyTol) best.label = to_string(id);
    }
  }
  if (best.membership <= kClassifyTol) return best;
  if (is_abelian(v)) {
    best.label = "reducible";
    return best;
  }
  try {
    const Realization r = realize_character(v);
    if (!is_representation(r.quadruple).ok) best.label = "non-representation";
  } catch (const Error&) {
    best.label = "non-representation";
  }
  return best;
}

namespace {

// Starts are drawn on the scale of the component coordinates at this t.
TraceVector random_start(Complex t, Rng& rng) {
  const double r = 2.0 + std::abs(t * t);
  std::array<Complex, 11> a;
  a[0] = t;
  for (int k = 1; k <= 6; ++k) a[k] = random_complex(rng, r);
  for (int k = 7; k <= 10; ++k) a[k] = random_complex(rng, r * std::max(1.0, std::abs(t)));
  return TraceVector::from_array(a);
}

std::optional<ExplorePoint> run_attempt(Complex t, std::uint64_t seed, int k) {
  Rng rng = rng_stream(seed, static_cast<std::uint64_t>(k));
  const NewtonResult nr = newton_solve(random_start(t, rng));
  if (!nr.converged) return std::nullopt;
  return ExplorePoint{k, nr.iterations, nr.vector, classify(nr.vector)};
}

}  // namespace

ExploreReport explore_solve(Complex t, std::uint64_t seed, int attempts, Exec exec) {
  require_finite(t, "t");
  for (ComponentId id : kAllComponents)
    if (!admissible(id, t))
      throw Error(Errc::ExcludedParameter, std::string("t is excluded for ") + to_string(id));

  std::vector<std::optional<ExplorePoint>> slots(static_cast<std::size_t>(std::max(attempts, 0)));
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < attempts; ++k) slots[static_cast<std::size_t>(k)] = run_attempt(t, seed, k);
  } else {
    for (int k = 0; k < attempts; ++k) slots[static_cast<std::size_t>(k)] = run_attempt(t, seed, k);
  }

  ExploreReport rep{t, seed, attempts, {}, {}};
  for (auto& s : slots)
    if (s) {
      ++rep.histogram[s->cls.label];
      rep.converged.push_back(std::move(*s));
    }
  return rep;
}

}  // namespace charvar
