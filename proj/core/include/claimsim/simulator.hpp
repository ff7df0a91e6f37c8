#pragma once

#include "claimsim/config.hpp"
#include "claimsim/consolidate.hpp"
#include "claimsim/paid_loss.hpp"
#include "claimsim/transaction.hpp"

#include <vector>

namespace claimsim {

/// Per-claim header row (one line of claims.csv).
struct ClaimSummary {
    long claim_no = 0;
    int occurrence_period = 0;
    double occurrence_time = 0.0;
    double notification_delay = 0.0;
    double settlement_delay = 0.0;
    double claim_size = 0.0; // constant-dollar ultimate (full precision)
    int n_payments = 0;
};

struct RunOptions {
    /// Apply inflation (base + claim-level layers) to the emitted data.
    /// When false, everything is in constant (time-zero) dollars.
    bool inflation = true;
    /// Worker threads; results are bit-identical for any value >= 1.
    int threads = 1;
};

/// Full per-claim detail kept for diagnostics (not serialized).
struct ClaimOutcome {
    ClaimRecord record;
    /// Path in the basis the backward pass ran on (claim-level inflation
    /// included when enabled; no base inflation).
    EstimatePath base_path;
    /// Path in emitted dollars (base inflation applied when enabled).
    EstimatePath emitted_path;
    int major_count = 1;
    int discarded_minors = 0;
    /// Effective post-notification major multipliers, in time order.
    std::vector<double> major_multipliers;
};

struct SimulationResult {
    std::vector<ClaimSummary> claims;          // ordered by claim_no
    std::vector<Transaction> transactions;     // grouped by claim_no, time-ordered
    std::vector<ClaimOutcome> outcomes;        // aligned with claims
    std::vector<int> claim_counts;             // per occurrence period
};

/// Simulate a full portfolio: counts, paid-loss histories, revision
/// schedules, backward consolidation and transaction emission. Deterministic
/// in (cfg, options.inflation); options.threads never changes the output.
SimulationResult run_simulation(const SimulationConfig& cfg, const RunOptions& options);

/// Same pipeline, but over externally supplied paid-loss histories (sizes,
/// delays and payment schedules given; revisions and consolidation are
/// generated on top). Claims are numbered in the order given.
SimulationResult run_over_claims(const SimulationConfig& cfg, std::vector<ClaimRecord> claims,
                                 const RunOptions& options);

} // namespace claimsim
