#pragma once

#include "claimsim/config.hpp"
#include "claimsim/rng.hpp"

#include <functional>
#include <string>
#include <vector>

namespace claimsim {

/// One claim's paid-loss history in constant dollars. Times are in periods:
/// `occurrence_time` is calendar time in (occurrence_period-1,
/// occurrence_period]; delays are measured from notification, so payment j
/// happens at calendar time occurrence_time + notification_delay +
/// payment_delays[j]. The last payment delay equals settlement_delay and the
/// amounts sum to `size` (exactly up to one floating-point rebalance of the
/// largest share).
struct ClaimRecord {
    int occurrence_period = 0; // 1-based
    int index_in_period = 0;   // 0-based within the period
    double occurrence_time = 0.0;
    double notification_delay = 0.0;
    double settlement_delay = 0.0;
    double size = 0.0;
    std::vector<double> payment_delays;
    std::vector<double> payment_amounts;

    int n_payments() const { return static_cast<int>(payment_amounts.size()); }
    double notification_time() const { return occurrence_time + notification_delay; }
    double settlement_time() const { return notification_time() + settlement_delay; }
    double payment_time(int j) const {
        return notification_time() + payment_delays[static_cast<std::size_t>(j)];
    }
};

/// Replaceable sampling hooks for every paid-loss ingredient. Each hook
/// receives its own dedicated random stream; swapping a hook changes nothing
/// about the other ingredients' randomness.
struct PaidLossHooks {
    /// Constant-dollar claim size.
    std::function<double(RngStream&)> claim_size;
    /// Notification delay (periods) given size.
    std::function<double(double size, RngStream&)> notification_delay;
    /// Settlement delay (periods from notification) given size.
    std::function<double(double size, RngStream&)> settlement_delay;
    /// Number of partial payments (>= 1) given size.
    std::function<int(double size, RngStream&)> payment_count;
    /// m proportions summing to 1 (the simulator rebalances the largest
    /// entry so the amounts sum to the size exactly).
    std::function<std::vector<double>(int m, double size, RngStream&)> payment_proportions;
    /// m strictly increasing epochs in (0, w], the last exactly w.
    std::function<std::vector<double>(int m, double settlement_delay, RngStream&)> payment_epochs;
};

/// The built-in hooks described in the config comments.
PaidLossHooks default_hooks(const SimulationConfig& cfg);

/// Poisson claim counts per occurrence period (mean = exposure * frequency),
/// drawn from the per-period streams "counts/<i>".
std::vector<int> simulate_claim_counts(const SimulationConfig& cfg);

/// Simulate one claim's paid-loss history. `period` is 1-based, `index` is
/// the 0-based claim index within that period. Deterministic in
/// (cfg.master_seed, period, index).
ClaimRecord simulate_claim(const SimulationConfig& cfg, const PaidLossHooks& hooks, int period,
                           int index);

/// Scope label helper: "claim/<period>/<index>/<purpose>".
std::string claim_scope(int period, int index, const char* purpose);

} // namespace claimsim
