#include "claimsim/paid_loss.hpp"

#include "claimsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace claimsim {

namespace {

std::vector<double> default_proportions(const PaidLossConfig& pl, int m, RngStream& rng) {
    if (m <= 1) {
        return {1.0};
    }
    const double last = rng.uniform(pl.last_share_min, pl.last_share_max);
    if (m == 2) {
        return {1.0 - last, last};
    }
    const double early_pot = rng.uniform(pl.early_pot_min, pl.early_pot_max);
    std::vector<double> weights(static_cast<std::size_t>(m - 2));
    double wsum = 0.0;
    for (auto& w : weights) {
        w = rng.uniform(pl.early_weight_min, pl.early_weight_max);
        wsum += w;
    }
    std::vector<double> props(static_cast<std::size_t>(m));
    for (int j = 0; j < m - 2; ++j) {
        props[static_cast<std::size_t>(j)] = early_pot * weights[static_cast<std::size_t>(j)] / wsum;
    }
    props[static_cast<std::size_t>(m - 2)] = 1.0 - early_pot - last; // settlement-sized remainder
    props[static_cast<std::size_t>(m - 1)] = last;
    return props;
}

std::vector<double> default_epochs(const PaidLossConfig& pl, int m, double w, RngStream& rng) {
    std::vector<double> spacings(static_cast<std::size_t>(m));
    double sum = 0.0;
    for (auto& s : spacings) {
        s = 1.0 + rng.uniform(-pl.epoch_jitter, pl.epoch_jitter);
        sum += s;
    }
    std::vector<double> epochs(static_cast<std::size_t>(m));
    double acc = 0.0;
    for (int j = 0; j < m; ++j) {
        acc += spacings[static_cast<std::size_t>(j)];
        epochs[static_cast<std::size_t>(j)] = w * acc / sum;
    }
    epochs[static_cast<std::size_t>(m - 1)] = w; // land exactly on settlement
    return epochs;
}

} // namespace

std::string claim_scope(int period, int index, const char* purpose) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "claim/%d/%d/%s", period, index, purpose);
    return std::string(buf);
}

PaidLossHooks default_hooks(const SimulationConfig& cfg) {
    const PaidLossConfig pl = cfg.paid_loss;
    const double ref = cfg.reference_size;
    PaidLossHooks hooks;
    hooks.claim_size = [pl](RngStream& rng) {
        return std::min(rng.lognormal(pl.size_log_mean, pl.size_log_sd), pl.size_cap);
    };
    hooks.notification_delay = [pl](double /*size*/, RngStream& rng) {
        return std::max(pl.min_delay, rng.exponential(pl.notification_mean));
    };
    hooks.settlement_delay = [pl, ref](double size, RngStream& rng) {
        const double log_mean = std::min(pl.settle_log_base + pl.settle_log_slope * std::log1p(size / ref),
                                         std::log(pl.settle_median_cap));
        const double w = rng.lognormal(log_mean, pl.settle_log_sd);
        return std::max(pl.min_delay, std::min(w, pl.settle_hard_cap));
    };
    hooks.payment_count = [pl](double size, RngStream& rng) {
        const double mean = 1.0 + pl.payment_count_scale * std::log1p(size / pl.payment_count_size_scale);
        const double raw = std::round(mean + rng.normal(0.0, 1.0));
        return static_cast<int>(std::max(1.0, raw));
    };
    hooks.payment_proportions = [pl](int m, double /*size*/, RngStream& rng) {
        return default_proportions(pl, m, rng);
    };
    hooks.payment_epochs = [pl](int m, double w, RngStream& rng) {
        return default_epochs(pl, m, w, rng);
    };
    return hooks;
}

std::vector<int> simulate_claim_counts(const SimulationConfig& cfg) {
    std::vector<int> counts(static_cast<std::size_t>(cfg.n_periods));
    for (int i = 1; i <= cfg.n_periods; ++i) {
        char label[32];
        std::snprintf(label, sizeof(label), "counts/%d", i);
        RngStream rng(cfg.master_seed, label);
        const double mean = cfg.exposure_at(i) * cfg.frequency_at(i);
        counts[static_cast<std::size_t>(i - 1)] = static_cast<int>(rng.poisson(mean));
    }
    return counts;
}

ClaimRecord simulate_claim(const SimulationConfig& cfg, const PaidLossHooks& hooks, int period,
                           int index) {
    ClaimRecord claim;
    claim.occurrence_period = period;
    claim.index_in_period = index;

    {
        // Uniform on the half-open interval (period-1, period]: subtract a
        // [0,1) uniform from the right endpoint.
        RngStream rng(cfg.master_seed, claim_scope(period, index, "occurrence"));
        claim.occurrence_time = static_cast<double>(period) - rng.uniform01();
    }
    {
        RngStream rng(cfg.master_seed, claim_scope(period, index, "size"));
        claim.size = hooks.claim_size(rng);
    }
    if (!(claim.size > 0.0) || !std::isfinite(claim.size)) {
        throw DataError("claim size hook produced a non-positive or non-finite size");
    }
    {
        RngStream rng(cfg.master_seed, claim_scope(period, index, "notify"));
        claim.notification_delay = hooks.notification_delay(claim.size, rng);
    }
    {
        RngStream rng(cfg.master_seed, claim_scope(period, index, "settle"));
        claim.settlement_delay = hooks.settlement_delay(claim.size, rng);
    }
    if (!(claim.settlement_delay > 0.0)) {
        throw DataError("settlement delay hook produced a non-positive delay");
    }

    int m = 0;
    {
        RngStream rng(cfg.master_seed, claim_scope(period, index, "paycount"));
        m = hooks.payment_count(claim.size, rng);
    }
    if (m < 1) {
        throw DataError("payment count hook produced fewer than one payment");
    }

    std::vector<double> props;
    {
        RngStream rng(cfg.master_seed, claim_scope(period, index, "payshape"));
        props = hooks.payment_proportions(m, claim.size, rng);
    }
    if (static_cast<int>(props.size()) != m) {
        throw DataError("payment proportion hook returned the wrong number of shares");
    }
    {
        RngStream rng(cfg.master_seed, claim_scope(period, index, "payepochs"));
        claim.payment_delays = hooks.payment_epochs(m, claim.settlement_delay, rng);
    }
    if (static_cast<int>(claim.payment_delays.size()) != m) {
        throw DataError("payment epoch hook returned the wrong number of epochs");
    }
    for (int j = 0; j < m; ++j) {
        const double prev = j == 0 ? 0.0 : claim.payment_delays[static_cast<std::size_t>(j - 1)];
        if (!(claim.payment_delays[static_cast<std::size_t>(j)] > prev)) {
            throw DataError("payment epochs must be strictly increasing and positive");
        }
    }
    if (claim.payment_delays.back() != claim.settlement_delay) {
        throw DataError("the last payment epoch must equal the settlement delay");
    }

    claim.payment_amounts.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        claim.payment_amounts[static_cast<std::size_t>(j)] =
            claim.size * props[static_cast<std::size_t>(j)];
    }
    // Rebalance the largest share so the amounts sum to the size exactly
    // (settlement must close the claim to the cent and beyond).
    const auto largest = std::max_element(claim.payment_amounts.begin(), claim.payment_amounts.end());
    double others = 0.0;
    for (auto it = claim.payment_amounts.begin(); it != claim.payment_amounts.end(); ++it) {
        if (it != largest) {
            others += *it;
        }
    }
    *largest = claim.size - others;
    if (!(*largest > 0.0)) {
        throw DataError("payment proportions left a non-positive residual share");
    }
    return claim;
}

} // namespace claimsim
