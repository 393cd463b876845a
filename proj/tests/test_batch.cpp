#include "charvar/batch.hpp"
#include "helpers.hpp"

using namespace charvar;

TEST_SUITE("batch") {
  TEST_CASE("identity battery passes, fault injection fails") {
    const IdentityReport ok = identity_battery(3, 120);
    CHECK(ok.pass);
    CHECK(ok.n == 120);
    CHECK(ok.pairs == 240);
    CHECK(ok.oracle_disagreements == 0);
    const IdentityReport bad = identity_battery(3, 120, true);
    CHECK_FALSE(bad.pass);
    CHECK(bad.type1 > 1e-6);
    const IdentityReport none = identity_battery(3, 0);
    CHECK(none.pass);
    CHECK(none.n == 0);
  }

  TEST_CASE("serial reference matches the parallel kernel") {
    const IdentityReport a = identity_battery(9, 64, false, Exec::Parallel);
    const IdentityReport b = identity_battery(9, 64, false, Exec::Serial);
    CHECK(a.type1 == b.type1);
    CHECK(a.det_diamond == b.det_diamond);
    CHECK(a.oracle_disagreements == b.oracle_disagreements);

    const std::vector<ComponentId> ids{ComponentId::X11, ComponentId::X4, ComponentId::X62};
    const auto p = soundness_sweep(ids, 4, 2, Exec::Parallel);
    const auto s = soundness_sweep(ids, 4, 2, Exec::Serial);
    REQUIRE(p.size() == s.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      CHECK(p[k].samples == s[k].samples);
      CHECK(p[k].relator == s[k].relator);
      CHECK(p[k].failures == 0);
    }
  }

  TEST_CASE("random admissible t respects the margin") {
    Rng rng = rng_stream(4, 0);
    for (ComponentId id : kAllComponents)
      for (int k = 0; k < 50; ++k) {
        const Complex t = random_admissible_t(id, rng);
        CHECK(admissible(id, t, 0.05));
        CHECK(std::abs(t) >= 0.2 - 1e-12);
        CHECK(std::abs(t) <= 3.0 + 1e-12);
      }
  }
}
