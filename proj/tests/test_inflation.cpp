#include "claimsim/config.hpp"
#include "claimsim/inflation.hpp"

#include <doctest.h>

#include <cmath>

using namespace claimsim;

TEST_CASE("constant base index compounds the annual rate over periods") {
    SimulationConfig cfg = default_config(); // quarters, 2% p.a.
    const InflationModel model(cfg, true);
    CHECK(model.base_index(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // Four quarters of (1.02^{1/4} - 1) give exactly one year of 2%.
    CHECK(model.base_index(4.0) == doctest::Approx(1.02).epsilon(1e-12));
    CHECK(model.base_index(8.0) == doctest::Approx(1.02 * 1.02).epsilon(1e-12));
    // Fractional horizons interpolate exponentially.
    CHECK(model.base_index(10.0) == doctest::Approx(1.0507524937871906).epsilon(1e-12));
}

TEST_CASE("quarterly rate paths compound per quarter and interpolate inside") {
    SimulationConfig cfg = default_config();
    cfg.inflation.quarterly_rates = {0.01, 0.005, 0.007};
    const InflationModel model(cfg, true);
    CHECK(model.base_index(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(model.base_index(1.0) == doctest::Approx(1.01).epsilon(1e-12));
    CHECK(model.base_index(2.0) == doctest::Approx(1.01 * 1.005).epsilon(1e-12));
    CHECK(model.base_index(2.5) == doctest::Approx(1.0185964794841478).epsilon(1e-12));
    // Horizons beyond the path extend the last rate.
    CHECK(model.base_index(5.0) == doctest::Approx(1.0365156105121496).epsilon(1e-12));
}

TEST_CASE("quarterly paths respect a non-quarterly time unit") {
    SimulationConfig cfg = default_config();
    cfg.time_unit_years = 0.5; // two quarters per period
    cfg.inflation.quarterly_rates = {0.01, 0.005, 0.007, 0.002};
    const InflationModel model(cfg, true);
    CHECK(model.base_index(1.0) == doctest::Approx(1.01 * 1.005).epsilon(1e-12));
    CHECK(model.base_index(2.0) == doctest::Approx(1.01 * 1.005 * 1.007 * 1.002).epsilon(1e-12));
}

TEST_CASE("payment-epoch factor grows small claims at the size-tapered rate") {
    SimulationConfig cfg = default_config(); // 30% p.a. payment layer, scale 200k
    const InflationModel model(cfg, true);
    // Size 0: full rate. Four quarters give exactly 30%.
    CHECK(model.payment_factor(4.0, 0.0) == doctest::Approx(1.3).epsilon(1e-12));
    // Half the reference size: half the per-quarter rate.
    CHECK(model.payment_factor(4.0, 100000.0) == doctest::Approx(1.1426302489218727).epsilon(1e-12));
    // A quarter of the reference size, six quarters.
    CHECK(model.payment_factor(6.0, 50000.0) == doctest::Approx(1.3465600400761948).epsilon(1e-12));
    // At or above the reference size the layer vanishes.
    CHECK(model.payment_factor(9.0, 200000.0) == 1.0);
    CHECK(model.payment_factor(9.0, 1e7) == 1.0);
}

TEST_CASE("occurrence-period factor cuts small late claims only") {
    SimulationConfig cfg = default_config(); // breakpoint 20, floor 50k, cut 0.4
    const InflationModel model(cfg, true);
    CHECK(model.occurrence_factor(20, 1000.0) == 1.0);
    CHECK(model.occurrence_factor(1, 0.0) == 1.0);
    CHECK(model.occurrence_factor(21, 0.0) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(model.occurrence_factor(21, 25000.0) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(model.occurrence_factor(40, 50000.0) == 1.0);
    CHECK(model.occurrence_factor(40, 500000.0) == 1.0);
}

TEST_CASE("a disabled model is the identity") {
    SimulationConfig cfg = default_config();
    cfg.inflation.quarterly_rates = {0.25, 0.25};
    const InflationModel model(cfg, false);
    CHECK_FALSE(model.enabled());
    CHECK(model.base_index(17.0) == 1.0);
    CHECK(model.payment_factor(17.0, 0.0) == 1.0);
    CHECK(model.occurrence_factor(39, 0.0) == 1.0);
    CHECK(model.inflate_payment(123.45, 17.0, 39, 0.0) == 123.45);
}

TEST_CASE("inflate_payment stacks all three layers") {
    SimulationConfig cfg = default_config();
    const InflationModel model(cfg, true);
    const double t = 6.0;
    const int period = 23;
    const double size = 25000.0;
    const double expected = 100.0 * model.base_index(t) * model.payment_factor(t, size) *
                            model.occurrence_factor(period, size);
    CHECK(model.inflate_payment(100.0, t, period, size) == doctest::Approx(expected).epsilon(1e-15));
    // All three layers are genuinely active in this example.
    CHECK(model.base_index(t) > 1.0);
    CHECK(model.payment_factor(t, size) > 1.0);
    CHECK(model.occurrence_factor(period, size) < 1.0);
}

TEST_CASE("homogeneous preset keeps base inflation but no claim-level layers") {
    SimulationConfig cfg = default_config();
    cfg.preset = "homogeneous";
    apply_preset(cfg);
    const InflationModel model(cfg, true);
    CHECK(model.base_index(4.0) == doctest::Approx(1.02).epsilon(1e-12));
    CHECK(model.payment_factor(8.0, 0.0) == 1.0);
    CHECK(model.occurrence_factor(33, 0.0) == 1.0);
}
