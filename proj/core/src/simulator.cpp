#include "claimsim/simulator.hpp"

#include "claimsim/errors.hpp"
#include "claimsim/inflation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

namespace claimsim {

namespace {

struct PerClaimOutput {
    ClaimSummary summary;
    std::vector<Transaction> transactions;
    ClaimOutcome outcome;
};

PerClaimOutput process_claim(const SimulationConfig& cfg, const InflationModel& inflation,
                             ClaimRecord claim, long claim_no) {
    PerClaimOutput out;

    Timeline timeline = build_timeline(cfg, claim);

    // Payment amounts in the backward-pass basis: claim-level inflation
    // layers are claim-intrinsic (they travel with the payments), the base
    // index is restated afterwards.
    std::vector<double> basis_amounts(claim.payment_amounts.size());
    for (int j = 0; j < claim.n_payments(); ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const double t = claim.payment_time(j);
        basis_amounts[ju] = claim.payment_amounts[ju] *
                            inflation.payment_factor(t, claim.size) *
                            inflation.occurrence_factor(claim.occurrence_period, claim.size);
    }

    EstimatePath base_path = consolidate_backward(claim, timeline, basis_amounts, cfg.kappa);
    EstimatePath emitted_path = restate_inflated(base_path, basis_amounts, inflation);

    out.transactions = emit_transactions(claim_no, claim, emitted_path);

    out.summary.claim_no = claim_no;
    out.summary.occurrence_period = claim.occurrence_period;
    out.summary.occurrence_time = claim.occurrence_time;
    out.summary.notification_delay = claim.notification_delay;
    out.summary.settlement_delay = claim.settlement_delay;
    out.summary.claim_size = claim.size;
    out.summary.n_payments = claim.n_payments();

    out.outcome.major_count = timeline.major_count;
    out.outcome.discarded_minors = timeline.discarded_minors;
    for (const PathEvent& ev : base_path.events) {
        if (ev.tau > 0.0 && is_major(ev.kind)) {
            out.outcome.major_multipliers.push_back(ev.multiplier);
        }
    }
    out.outcome.record = std::move(claim);
    out.outcome.base_path = std::move(base_path);
    out.outcome.emitted_path = std::move(emitted_path);
    return out;
}

SimulationResult assemble(const SimulationConfig& cfg, std::vector<ClaimRecord> claims,
                          const RunOptions& options, std::vector<int> claim_counts) {
    const InflationModel inflation(cfg, options.inflation);
    const std::size_t n = claims.size();

    std::vector<PerClaimOutput> outputs(n);
    const int threads = std::max(1, options.threads);
    if (threads == 1 || n < 2) {
        for (std::size_t k = 0; k < n; ++k) {
            outputs[k] = process_claim(cfg, inflation, std::move(claims[k]),
                                       static_cast<long>(k + 1));
        }
    } else {
        // Claims are independent given (seed, identity); a shared atomic
        // cursor keeps the partition irrelevant to the result.
        std::atomic<std::size_t> next{0};
        std::mutex error_mutex;
        std::exception_ptr error;
        auto worker = [&]() {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= n) {
                    return;
                }
                try {
                    outputs[k] = process_claim(cfg, inflation, std::move(claims[k]),
                                               static_cast<long>(k + 1));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
        if (error) {
            std::rethrow_exception(error);
        }
    }

    SimulationResult result;
    result.claim_counts = std::move(claim_counts);
    result.claims.reserve(n);
    result.outcomes.reserve(n);
    std::size_t total_txns = 0;
    for (const auto& out : outputs) {
        total_txns += out.transactions.size();
    }
    result.transactions.reserve(total_txns);
    for (auto& out : outputs) {
        result.claims.push_back(out.summary);
        result.transactions.insert(result.transactions.end(), out.transactions.begin(),
                                   out.transactions.end());
        result.outcomes.push_back(std::move(out.outcome));
    }
    return result;
}

} // namespace

SimulationResult run_simulation(const SimulationConfig& cfg, const RunOptions& options) {
    validate(cfg);
    std::vector<int> counts = simulate_claim_counts(cfg);

    const PaidLossHooks hooks = default_hooks(cfg);
    std::vector<ClaimRecord> claims;
    std::size_t total = 0;
    for (int c : counts) {
        total += static_cast<std::size_t>(c);
    }
    claims.reserve(total);
    for (int i = 1; i <= cfg.n_periods; ++i) {
        const int count = counts[static_cast<std::size_t>(i - 1)];
        for (int r = 0; r < count; ++r) {
            claims.push_back(simulate_claim(cfg, hooks, i, r));
        }
    }
    return assemble(cfg, std::move(claims), options, std::move(counts));
}

SimulationResult run_over_claims(const SimulationConfig& cfg, std::vector<ClaimRecord> claims,
                                 const RunOptions& options) {
    validate(cfg);
    int max_period = 0;
    for (const ClaimRecord& claim : claims) {
        if (claim.occurrence_period < 1) {
            throw DataError("external claims must have a positive occurrence period");
        }
        max_period = std::max(max_period, claim.occurrence_period);
    }
    std::vector<int> counts(static_cast<std::size_t>(std::max(max_period, cfg.n_periods)), 0);
    for (const ClaimRecord& claim : claims) {
        ++counts[static_cast<std::size_t>(claim.occurrence_period - 1)];
    }
    return assemble(cfg, std::move(claims), options, std::move(counts));
}

} // namespace claimsim
