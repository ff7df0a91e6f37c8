#include "claimsim/paid_loss.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

using namespace claimsim;

namespace {

SimulationConfig test_config(std::uint64_t seed) {
    SimulationConfig cfg = default_config();
    cfg.master_seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("claim simulation is deterministic in (seed, period, index)") {
    const SimulationConfig cfg = test_config(31415);
    const PaidLossHooks hooks = default_hooks(cfg);
    const ClaimRecord a = simulate_claim(cfg, hooks, 7, 12);
    const ClaimRecord b = simulate_claim(cfg, hooks, 7, 12);
    CHECK(a.size == b.size);
    CHECK(a.occurrence_time == b.occurrence_time);
    CHECK(a.notification_delay == b.notification_delay);
    CHECK(a.settlement_delay == b.settlement_delay);
    CHECK(a.payment_delays == b.payment_delays);
    CHECK(a.payment_amounts == b.payment_amounts);

    const ClaimRecord c = simulate_claim(cfg, hooks, 7, 13);
    CHECK(a.size != c.size);
}

TEST_CASE("paid-loss invariants hold across a large sample") {
    const SimulationConfig cfg = test_config(2718);
    const PaidLossHooks hooks = default_hooks(cfg);
    int checked = 0;
    for (int period = 1; period <= 10; ++period) {
        for (int index = 0; index < 300; ++index) {
            const ClaimRecord claim = simulate_claim(cfg, hooks, period, index);
            ++checked;
            REQUIRE(claim.size > 0.0);
            REQUIRE(claim.size <= cfg.paid_loss.size_cap);
            // Occurrence inside (period-1, period].
            REQUIRE(claim.occurrence_time > static_cast<double>(period - 1));
            REQUIRE(claim.occurrence_time <= static_cast<double>(period));
            REQUIRE(claim.notification_delay >= cfg.paid_loss.min_delay);
            REQUIRE(claim.settlement_delay > 0.0);
            REQUIRE(claim.settlement_delay <= cfg.paid_loss.settle_hard_cap);
            REQUIRE(claim.n_payments() >= 1);
            // Epochs strictly increasing, last exactly at settlement.
            for (int j = 0; j < claim.n_payments(); ++j) {
                const double prev =
                    j == 0 ? 0.0 : claim.payment_delays[static_cast<std::size_t>(j - 1)];
                REQUIRE(claim.payment_delays[static_cast<std::size_t>(j)] > prev);
            }
            REQUIRE(claim.payment_delays.back() == claim.settlement_delay);
            // Amounts positive and summing to the size.
            double total = 0.0;
            for (double a : claim.payment_amounts) {
                REQUIRE(a > 0.0);
                total += a;
            }
            REQUIRE(total == doctest::Approx(claim.size).epsilon(1e-12));
            // The settling payment takes between 5% and 15% of the claim
            // when there are multiple payments.
            if (claim.n_payments() >= 2) {
                const double last_share = claim.payment_amounts.back() / claim.size;
                REQUIRE(last_share >= cfg.paid_loss.last_share_min - 1e-9);
                REQUIRE(last_share <= cfg.paid_loss.last_share_max + 1e-9);
            }
            // The second-to-last payment dominates for m >= 3.
            if (claim.n_payments() >= 3) {
                const auto m = static_cast<std::size_t>(claim.n_payments());
                double max_other = 0.0;
                for (std::size_t j = 0; j + 2 < m; ++j) {
                    max_other = std::max(max_other, claim.payment_amounts[j]);
                }
                REQUIRE(claim.payment_amounts[m - 2] > max_other);
            }
        }
    }
    CHECK(checked == 3000);
}

TEST_CASE("claim size distribution: capped lognormal with the configured median") {
    const SimulationConfig cfg = test_config(9001);
    const PaidLossHooks hooks = default_hooks(cfg);
    const int n = 20000;
    std::vector<double> sizes(n);
    for (int i = 0; i < n; ++i) {
        sizes[static_cast<std::size_t>(i)] =
            simulate_claim(cfg, hooks, 1 + (i % 40), i / 40).size;
    }
    std::nth_element(sizes.begin(), sizes.begin() + n / 2, sizes.end());
    const double median = sizes[static_cast<std::size_t>(n / 2)];
    // Median of exp(N(9.5, 1.6^2)) is exp(9.5) ~= 13360; sample median of
    // 20k draws stays within a few percent.
    CHECK(median == doctest::Approx(13359.726829661873).epsilon(0.08));
    CHECK(*std::max_element(sizes.begin(), sizes.end()) <= cfg.paid_loss.size_cap);
}

TEST_CASE("larger claims settle later and pay in more parts") {
    const SimulationConfig cfg = test_config(5150);
    const PaidLossHooks hooks = default_hooks(cfg);
    const int n = 5000;
    double sum_ls = 0.0, sum_w = 0.0, sum_ls2 = 0.0, sum_w2 = 0.0, sum_lsw = 0.0;
    double m_small = 0.0, m_large = 0.0;
    int n_small = 0, n_large = 0;
    for (int i = 0; i < n; ++i) {
        const ClaimRecord claim = simulate_claim(cfg, hooks, 1 + (i % 40), i / 40);
        const double ls = std::log(claim.size);
        const double w = claim.settlement_delay;
        sum_ls += ls;
        sum_w += w;
        sum_ls2 += ls * ls;
        sum_w2 += w * w;
        sum_lsw += ls * w;
        if (claim.size < 10000.0) {
            m_small += claim.n_payments();
            ++n_small;
        } else if (claim.size > 200000.0) {
            m_large += claim.n_payments();
            ++n_large;
        }
    }
    const double nn = static_cast<double>(n);
    const double cov = sum_lsw / nn - (sum_ls / nn) * (sum_w / nn);
    const double v1 = sum_ls2 / nn - (sum_ls / nn) * (sum_ls / nn);
    const double v2 = sum_w2 / nn - (sum_w / nn) * (sum_w / nn);
    CHECK(cov / std::sqrt(v1 * v2) > 0.2);
    REQUIRE(n_small > 100);
    REQUIRE(n_large > 100);
    CHECK(m_large / n_large > m_small / n_small + 2.0);
}

TEST_CASE("claim counts are Poisson(exposure * frequency) per period") {
    SimulationConfig cfg = test_config(777);
    cfg.n_periods = 40;
    cfg.exposure = {5000.0};
    cfg.frequency = {0.10};
    const std::vector<int> counts = simulate_claim_counts(cfg);
    REQUIRE(counts.size() == 40);
    double total = 0.0;
    for (int c : counts) {
        REQUIRE(c > 350); // mean 500, sd ~22; 350 is ~6.7 sigma
        REQUIRE(c < 650);
        total += c;
    }
    // Portfolio mean 20000, sd ~141; accept 5 sigma.
    CHECK(std::abs(total - 20000.0) < 5.0 * std::sqrt(20000.0));
    CHECK(simulate_claim_counts(cfg) == counts); // reproducible

    // Per-period profiles are honored.
    SimulationConfig varied = cfg;
    varied.n_periods = 2;
    varied.exposure = {10000.0, 0.0};
    varied.frequency = {0.10, 0.10};
    const std::vector<int> vc = simulate_claim_counts(varied);
    REQUIRE(vc.size() == 2);
    CHECK(vc[0] > 0);
    CHECK(vc[1] == 0);
}

TEST_CASE("custom hooks replace individual ingredients") {
    const SimulationConfig cfg = test_config(11);
    PaidLossHooks hooks = default_hooks(cfg);
    hooks.claim_size = [](RngStream&) { return 1000.0; };
    hooks.payment_count = [](double, RngStream&) { return 3; };
    const ClaimRecord claim = simulate_claim(cfg, hooks, 2, 5);
    CHECK(claim.size == 1000.0);
    CHECK(claim.n_payments() == 3);
    // The default epoch/proportion machinery still applies.
    CHECK(claim.payment_delays.back() == claim.settlement_delay);
    CHECK(std::accumulate(claim.payment_amounts.begin(), claim.payment_amounts.end(), 0.0) ==
          doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("derived calendar helpers are consistent") {
    const SimulationConfig cfg = test_config(4);
    const PaidLossHooks hooks = default_hooks(cfg);
    const ClaimRecord claim = simulate_claim(cfg, hooks, 3, 0);
    CHECK(claim.notification_time() ==
          doctest::Approx(claim.occurrence_time + claim.notification_delay).epsilon(1e-15));
    CHECK(claim.settlement_time() ==
          doctest::Approx(claim.notification_time() + claim.settlement_delay).epsilon(1e-15));
    CHECK(claim.payment_time(claim.n_payments() - 1) ==
          doctest::Approx(claim.settlement_time()).epsilon(1e-15));
}
