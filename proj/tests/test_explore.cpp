#include "charvar/explore.hpp"
#include "helpers.hpp"

using namespace charvar;

TEST_SUITE("explore") {
  TEST_CASE("catalog points are fixed points") {
    for (ComponentId id : kAllComponents)
      for (const ComponentSample& s : sample_component(id, 3.0)) {
        const NewtonResult r = newton_solve(s.vector);
        CHECK(r.converged);
        CHECK(r.iterations <= 2);
        CHECK(max_deviation(r.vector, s.vector) <= 1e-8 * std::max(1.0, s.vector.max_abs()));
        CHECK(classify(r.vector).label == to_string(id));
      }
  }

  TEST_CASE("perturbed starts return to the singular X51 point") {
    const TraceVector s = sample_component(ComponentId::X51, 3.0)[0].vector;
    auto a = s.as_array();
    for (std::size_t k = 1; k < a.size(); ++k) a[k] += Complex(1e-3, -5e-4) * static_cast<double>(k % 3);
    const NewtonResult r = newton_solve(TraceVector::from_array(a));
    REQUIRE(r.converged);
    CHECK(max_deviation(r.vector, s) <= 1e-8);
  }

  TEST_CASE("reducible character is recognised") {
    const Complex t = 3.0, p = t * t - 2.0, q = t * t * t - 3.0 * t;
    const TraceVector v{t, p, p, p, p, p, p, q, q, q, q};
    CHECK(max_normalized(explore_system(v)) <= 1e-12);
    CHECK(classify(v).label == "reducible");
  }

  TEST_CASE("parallel and serial runs agree") {
    const ExploreReport a = explore_solve(Complex(1.3, -0.8), 5, 24, Exec::Parallel);
    const ExploreReport b = explore_solve(Complex(1.3, -0.8), 5, 24, Exec::Serial);
    REQUIRE(a.converged.size() == b.converged.size());
    for (std::size_t k = 0; k < a.converged.size(); ++k) {
      CHECK(a.converged[k].attempt == b.converged[k].attempt);
      CHECK(max_deviation(a.converged[k].vector, b.converged[k].vector) == 0.0);
      CHECK(a.converged[k].cls.label == b.converged[k].cls.label);
    }
    CHECK(a.histogram == b.histogram);
  }

  TEST_CASE("probe at t = 3 classifies every converged point") {
    const ExploreReport r = explore_solve(3.0, 0, 60);
    CHECK(!r.converged.empty());
    for (const ExplorePoint& p : r.converged) {
      INFO(p.attempt);
      CHECK(p.cls.label != "unclassified");
      if (p.cls.label != "reducible" && p.cls.label != "non-representation") CHECK(p.cls.membership <= 1e-6);
    }
  }

  TEST_CASE("excluded t is refused") {
    CHECK_THROWS_AS(explore_solve(std::sqrt(3.0), 0, 1), Error);
  }
}
