// Acceptance gate: exercises the complete pipeline against its contract.
// Prints exactly one PASS/FAIL line per criterion (with the measured values)
// and exits with the number of failed criteria. All tolerances are fixed
// constants below; nothing is derived from the observed data.

#include "claimsim/claimsim.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace claimsim;

namespace {

// --- pinned tolerances -------------------------------------------------------
constexpr double kClosureRelTol = 1e-9;    // |anchor - size| per claim, no inflation
constexpr double kReplayRelTol = 1e-9;     // forward replay vs stored estimates
constexpr long kMinClaims = 10000;         // portfolio scale at default settings
constexpr double kMaxRunSeconds = 60.0;    // single-threaded full run
constexpr int kMinFactorPairs = 500;       // per seed
constexpr double kCorrLo = -0.75;          // factor correlation band (seed average)
constexpr double kCorrHi = -0.45;
constexpr double kEarlyRecogLo = 0.60;     // smoothed recognition, periods 1-10
constexpr double kEarlyRecogHi = 0.80;
constexpr double kLateRecogLo = 0.85;      // smoothed recognition, periods 31-40
constexpr double kLateRecogHi = 0.97;
constexpr double kHetDevLo = 5.0;          // heterogeneous total deviation, % (seed mean)
constexpr double kHetDevHi = 35.0;
constexpr int kHetMinPositive = 8;         // of 10 seeds
constexpr double kHomAbsDevMax = 10.0;     // homogeneous mean |total deviation|, %
constexpr double kSigma = 3.5;             // statistical tolerance, standard errors

int g_failures = 0;
int g_criterion = 0;

void report(bool pass, const std::string& what, const std::string& detail) {
    ++g_criterion;
    if (!pass) {
        ++g_failures;
    }
    std::cout << (pass ? "PASS" : "FAIL") << " [" << g_criterion << "] " << what;
    if (!detail.empty()) {
        std::cout << " -- " << detail;
    }
    std::cout << std::endl;
}

void report_error(const std::string& what, const std::exception& e) {
    report(false, what, std::string("exception: ") + e.what());
}

std::string fmt(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

ClaimRecord worked_claim(double first, double second) {
    ClaimRecord claim;
    claim.occurrence_period = 1;
    claim.index_in_period = 0;
    claim.occurrence_time = 0.5;
    claim.notification_delay = 0.5;
    claim.settlement_delay = 3.0;
    claim.size = first + second;
    claim.payment_delays = {1.0, 3.0};
    claim.payment_amounts = {first, second};
    return claim;
}

Timeline worked_timeline(EventKind revision_kind, double factor) {
    Timeline tl;
    tl.events = {
        TimelineEvent{0.0, EventKind::Major, -1, 1.0},
        TimelineEvent{1.0, EventKind::Payment, 0, 1.0},
        TimelineEvent{2.0, revision_kind, -1, factor},
        TimelineEvent{3.0, EventKind::Payment, 1, 1.0},
    };
    return tl;
}

struct SeedDiagnostics {
    std::size_t pair_count = 0;
    double correlation = 0.0;
    std::vector<double> smoothed;
};

} // namespace

int main() {
    std::cout << "acceptance: transaction-level claim simulation pipeline" << std::endl;

    // Shared full-scale runs at the built-in default configuration.
    SimulationConfig cfg = default_config();
    SimulationResult inflated;
    SimulationResult constant;
    double run_seconds = -1.0;
    bool runs_ok = true;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        inflated = run_simulation(cfg, RunOptions{.inflation = true, .threads = 1});
        const auto t1 = std::chrono::steady_clock::now();
        run_seconds = std::chrono::duration<double>(t1 - t0).count();
        constant = run_simulation(cfg, RunOptions{.inflation = false, .threads = 1});
    } catch (const std::exception& e) {
        runs_ok = false;
        std::cout << "setup failed: " << e.what() << std::endl;
    }

    // [1] Scale, closure at settlement, and constant-dollar consistency.
    try {
        bool pass = runs_ok;
        std::string detail;
        if (runs_ok) {
            long bad_anchor = 0;
            for (const ClaimOutcome& oc : constant.outcomes) {
                const double tol = kClosureRelTol * std::max(1.0, oc.record.size);
                if (std::abs(oc.base_path.anchor - oc.record.size) > tol) {
                    ++bad_anchor;
                }
            }
            long open_at_settlement = 0;
            for (const SimulationResult* result : {&inflated, &constant}) {
                const auto& txns = result->transactions;
                for (std::size_t i = 0; i < txns.size(); ++i) {
                    const bool last_of_claim =
                        i + 1 == txns.size() || txns[i + 1].claim_no != txns[i].claim_no;
                    if (last_of_claim && txns[i].outstanding != 0) {
                        ++open_at_settlement;
                    }
                }
            }
            const long n_claims = static_cast<long>(inflated.claims.size());
            pass = bad_anchor == 0 && open_at_settlement == 0 && n_claims >= kMinClaims &&
                   run_seconds < kMaxRunSeconds;
            detail = std::to_string(n_claims) + " claims in " + fmt(run_seconds, 2) +
                     "s; constant-dollar settlements off by >1e-9: " +
                     std::to_string(bad_anchor) +
                     "; rows still open at settlement: " + std::to_string(open_at_settlement);
        }
        report(pass, "portfolio scale and exact closure at settlement", detail);
    } catch (const std::exception& e) {
        report_error("portfolio scale and exact closure at settlement", e);
    }

    // [2] Case-estimate adequacy: kappa * estimate >= paid-to-date everywhere.
    try {
        long violations = -1;
        if (runs_ok) {
            violations = 0;
            for (const SimulationResult* result : {&inflated, &constant}) {
                for (const ClaimOutcome& oc : result->outcomes) {
                    violations += count_adequacy_violations(oc.base_path, cfg.kappa);
                    violations += count_adequacy_violations(oc.emitted_path, cfg.kappa);
                }
            }
        }
        report(violations == 0, "estimate adequacy floor holds at every pre-transaction state",
               "violations: " + std::to_string(violations) + " (kappa " + fmt(cfg.kappa, 2) + ")");
    } catch (const std::exception& e) {
        report_error("estimate adequacy floor holds at every pre-transaction state", e);
    }

    // [3] Forward replay: applying the recorded effective multipliers forward
    //     reproduces the backward-consolidated estimates.
    try {
        double worst = runs_ok ? 0.0 : 1.0;
        if (runs_ok) {
            for (const ClaimOutcome& oc : inflated.outcomes) {
                const auto& rows = oc.base_path.events;
                double y = rows.empty() ? 0.0 : rows[0].y;
                for (std::size_t k = 1; k < rows.size(); ++k) {
                    const double c_pre = rows[k - 1].c;
                    if (is_major(rows[k].kind)) {
                        y *= rows[k].multiplier;
                    } else if (is_minor(rows[k].kind)) {
                        y = c_pre + (y - c_pre) * rows[k].multiplier;
                    }
                    const double rel =
                        std::abs(y - rows[k].y) / std::max(1.0, std::abs(rows[k].y));
                    worst = std::max(worst, rel);
                }
            }
        }
        report(worst <= kReplayRelTol, "forward replay matches the consolidated estimates",
               "worst relative error " + fmt(worst, 12));
    } catch (const std::exception& e) {
        report_error("forward replay matches the consolidated estimates", e);
    }

    // [4] Worked transaction rows: emitted values match the frozen examples.
    try {
        const ClaimRecord minor_claim = worked_claim(2005.0, 22778.9064);
        const EstimatePath minor_path = consolidate_backward(
            minor_claim, worked_timeline(EventKind::Minor, 1.0503), minor_claim.payment_amounts,
            0.95);
        const std::vector<Transaction> minor_rows = emit_transactions(1, minor_claim, minor_path);

        const ClaimRecord major_claim = worked_claim(19727.0, 148497.2471);
        const EstimatePath major_path = consolidate_backward(
            major_claim, worked_timeline(EventKind::Major, 3.1759), major_claim.payment_amounts,
            0.95);
        const std::vector<Transaction> major_rows = emit_transactions(2, major_claim, major_path);

        const Transaction& mi = minor_rows[2];
        const Transaction& ma = major_rows[2];
        const bool pass = mi.incurred == 24784 && mi.cumulative_paid == 2005 &&
                          mi.outstanding == 22779 && mi.multiplier == 1.0503 &&
                          ma.incurred == 168224 && ma.outstanding == 148497 &&
                          ma.cumulative_paid == 19727 && ma.multiplier == 3.1759 &&
                          minor_rows.back().outstanding == 0 && major_rows.back().outstanding == 0;
        report(pass, "worked revision rows emit the frozen example values",
               "minor row " + std::to_string(mi.incurred) + "/" +
                   std::to_string(mi.cumulative_paid) + ", major row " +
                   std::to_string(ma.incurred) + "/" + std::to_string(ma.outstanding));
    } catch (const std::exception& e) {
        report_error("worked revision rows emit the frozen example values", e);
    }

    // [5] + [6] share five seeded runs.
    std::vector<SeedDiagnostics> diags;
    std::string diag_error;
    try {
        for (std::uint64_t seed = 101; seed <= 105; ++seed) {
            SimulationConfig c = default_config();
            c.master_seed = seed;
            const SimulationResult r = run_simulation(c, RunOptions{});
            SeedDiagnostics d;
            const auto pairs = major_factor_pairs(r.transactions);
            d.pair_count = pairs.size();
            d.correlation = pearson_correlation(pairs);
            const Triangle incurred = aggregate_triangle(r.claims, r.transactions,
                                                         AggregateKind::IncurredEstimate,
                                                         c.n_periods);
            d.smoothed = recognition_profile(incurred, c.n_periods / 4).smoothed;
            diags.push_back(std::move(d));
        }
    } catch (const std::exception& e) {
        diag_error = e.what();
    }

    // [5] Successive major revision factors are negatively dependent.
    try {
        bool pass = diag_error.empty();
        double avg_corr = 0.0;
        std::size_t min_pairs = diags.empty() ? 0 : diags[0].pair_count;
        for (const SeedDiagnostics& d : diags) {
            avg_corr += d.correlation;
            min_pairs = std::min(min_pairs, d.pair_count);
        }
        if (!diags.empty()) {
            avg_corr /= static_cast<double>(diags.size());
        }
        pass = pass && min_pairs >= static_cast<std::size_t>(kMinFactorPairs) &&
               avg_corr >= kCorrLo && avg_corr <= kCorrHi;
        report(pass, "successive major factors correlate negatively",
               diag_error.empty()
                   ? "5-seed average correlation " + fmt(avg_corr) + " in [" + fmt(kCorrLo, 2) +
                         ", " + fmt(kCorrHi, 2) + "], min pairs " + std::to_string(min_pairs)
                   : "exception: " + diag_error);
    } catch (const std::exception& e) {
        report_error("successive major factors correlate negatively", e);
    }

    // [6] Incurred recognition: slow early, near-complete late, rising.
    try {
        bool pass = diag_error.empty() && !diags.empty();
        double early_avg = 0.0;
        double late_avg = 0.0;
        int out_of_band = 0;
        if (pass) {
            const std::size_t n = diags[0].smoothed.size();
            std::vector<double> avg(n, 0.0);
            for (const SeedDiagnostics& d : diags) {
                for (std::size_t i = 0; i < n; ++i) {
                    avg[i] += d.smoothed[i] / static_cast<double>(diags.size());
                }
            }
            for (std::size_t i = 0; i < 10 && i < n; ++i) {
                early_avg += avg[i] / 10.0;
                if (avg[i] < kEarlyRecogLo || avg[i] > kEarlyRecogHi) {
                    ++out_of_band;
                }
            }
            for (std::size_t i = 30; i < 40 && i < n; ++i) {
                late_avg += avg[i] / 10.0;
                if (avg[i] < kLateRecogLo || avg[i] > kLateRecogHi) {
                    ++out_of_band;
                }
            }
            pass = out_of_band == 0 && late_avg > early_avg;
        }
        report(pass, "case estimates recognize the ultimate gradually",
               diag_error.empty() ? "early (1-10) avg " + fmt(early_avg) + " in [" +
                                        fmt(kEarlyRecogLo, 2) + ", " + fmt(kEarlyRecogHi, 2) +
                                        "]; late (31-40) avg " + fmt(late_avg) + " in [" +
                                        fmt(kLateRecogLo, 2) + ", " + fmt(kLateRecogHi, 2) +
                                        "]; periods out of band: " + std::to_string(out_of_band)
                                  : "exception: " + diag_error);
    } catch (const std::exception& e) {
        report_error("case estimates recognize the ultimate gradually", e);
    }

    // [7] Chain ladder: biased up under heterogeneity, near-unbiased without it.
    try {
        std::vector<double> het_devs;
        std::vector<double> hom_devs;
        for (std::uint64_t seed = 201; seed <= 210; ++seed) {
            for (const bool homogeneous : {false, true}) {
                SimulationConfig c = default_config();
                c.master_seed = seed;
                if (homogeneous) {
                    c.preset = "homogeneous";
                    apply_preset(c);
                }
                const SimulationResult r = run_simulation(c, RunOptions{});
                const Triangle incurred = aggregate_triangle(
                    r.claims, r.transactions, AggregateKind::IncurredEstimate, c.n_periods);
                const Triangle paid = aggregate_triangle(
                    r.claims, r.transactions, AggregateKind::CumulativePaid, c.n_periods);
                const ChainLadderResult cl = chain_ladder(incurred, paid);
                const std::vector<double> actual =
                    actual_outstanding_by_period(r.claims, r.transactions, c.n_periods);
                const double dev = deviation_report(cl, actual).total.percent;
                (homogeneous ? hom_devs : het_devs).push_back(dev);
            }
        }
        int positive = 0;
        double het_mean = 0.0;
        for (double d : het_devs) {
            positive += d > 0.0;
            het_mean += d / static_cast<double>(het_devs.size());
        }
        double hom_mean_abs = 0.0;
        for (double d : hom_devs) {
            hom_mean_abs += std::abs(d) / static_cast<double>(hom_devs.size());
        }
        const bool pass = positive >= kHetMinPositive && het_mean >= kHetDevLo &&
                          het_mean <= kHetDevHi && hom_mean_abs < kHomAbsDevMax;
        report(pass, "chain ladder over-forecasts only under heterogeneity",
               "heterogeneous: " + std::to_string(positive) + "/10 positive, mean " +
                   fmt(het_mean, 2) + "% in [" + fmt(kHetDevLo, 0) + ", " + fmt(kHetDevHi, 0) +
                   "]; homogeneous mean |dev| " + fmt(hom_mean_abs, 2) + "% < " +
                   fmt(kHomAbsDevMax, 0));
    } catch (const std::exception& e) {
        report_error("chain ladder over-forecasts only under heterogeneity", e);
    }

    // [8] Sampling distributions match their specifications.
    try {
        std::ostringstream detail;
        bool pass = true;

        // Major revision count probabilities at three frozen sizes.
        {
            const MajorRevisionConfig mc;
            RngStream rng(881, "acceptance/major-count");
            const int n = 100000;
            int small_not_one = 0;
            int c2_mid = 0, c3_mid = 0, c2_big = 0, c3_big = 0;
            for (int i = 0; i < n; ++i) {
                if (sample_major_count(mc, 15000.0, 6, rng) != 1) {
                    ++small_not_one;
                }
                const int k_mid = sample_major_count(mc, 100000.0, 6, rng);
                c2_mid += k_mid == 2;
                c3_mid += k_mid == 3;
                const int k_big = sample_major_count(mc, 200000.0, 6, rng);
                c2_big += k_big == 2;
                c3_big += k_big == 3;
            }
            const double p2_mid = 0.23783783783783785;
            const double p3_mid = 0.22972972972972974;
            auto within = [&](int count, double p) {
                const double se = std::sqrt(p * (1.0 - p) / n);
                return std::abs(count / static_cast<double>(n) - p) <= kSigma * se;
            };
            const bool ok = small_not_one == 0 && within(c2_mid, p2_mid) &&
                            within(c3_mid, p3_mid) && within(c2_big, 0.4) && within(c3_big, 0.5);
            pass = pass && ok;
            detail << "major counts " << (ok ? "ok" : "OFF");
        }

        // Minor revision log-factor means by lifetime tertile.
        {
            const MinorRevisionConfig mn;
            RngStream rng(882, "acceptance/minor-mean");
            const int n = 20000;
            double early = 0.0;
            double mid = 0.0, late = 0.0;
            for (int i = 0; i < n; ++i) {
                early += std::log(sample_minor_factor(mn, 12.0, 2.0, false, rng));
                mid += std::log(sample_minor_factor(mn, 12.0, 6.0, false, rng));
                late += std::log(sample_minor_factor(mn, 12.0, 11.0, false, rng));
            }
            const double tol = kSigma * mn.sd_default / std::sqrt(static_cast<double>(n));
            const bool ok = std::abs(early / n - mn.mu_early) <= tol &&
                            std::abs(mid / n - mn.mu_mid) <= tol &&
                            std::abs(late / n - mn.mu_late) <= tol && early > mid && mid > late;
            pass = pass && ok;
            detail << ", minor tertiles " << (ok ? "ok" : "OFF");
        }

        // Free-minor count: geometric with mean min(3, w/4).
        {
            RngStream rng(883, "acceptance/minor-count");
            const int n = 100000;
            double total = 0.0;
            for (int i = 0; i < n; ++i) {
                total += static_cast<double>(rng.geometric_mean(3.0));
            }
            const double se = std::sqrt(12.0 / n); // variance m(1+m) = 12 at mean 3
            const bool ok = std::abs(total / n - 3.0) <= kSigma * se;
            pass = pass && ok;
            detail << ", free-minor count " << (ok ? "ok" : "OFF");
        }

        report(pass, "revision sampling matches the specified distributions", detail.str());
    } catch (const std::exception& e) {
        report_error("revision sampling matches the specified distributions", e);
    }

    // [9] Thread-count invariance of the emitted bytes.
    try {
        SimulationConfig c = default_config();
        c.master_seed = 4242;
        const SimulationResult serial = run_simulation(c, RunOptions{.inflation = true, .threads = 1});
        const SimulationResult parallel =
            run_simulation(c, RunOptions{.inflation = true, .threads = 8});
        const bool pass =
            transactions_csv_text(serial.transactions) ==
                transactions_csv_text(parallel.transactions) &&
            claims_csv_text(serial.claims) == claims_csv_text(parallel.claims);
        report(pass, "output bytes are identical across thread counts",
               std::to_string(serial.transactions.size()) + " transactions compared");
    } catch (const std::exception& e) {
        report_error("output bytes are identical across thread counts", e);
    }

    // [10] Triangles: worked example plus exact resolution coarsening.
    try {
        // Worked 4-period example.
        std::vector<ClaimSummary> claims;
        claims.push_back(ClaimSummary{1, 1, 0.4, 0.1, 3.4, 90.0, 2});
        claims.push_back(ClaimSummary{2, 2, 1.9, 0.6, 7.0, 200.0, 1});
        std::vector<Transaction> txns(6);
        auto set = [&](std::size_t i, long no, double t, EventKind k, std::int64_t inc,
                       std::int64_t cum) {
            txns[i].claim_no = no;
            txns[i].txn_time = t;
            txns[i].kind = k;
            txns[i].incurred = inc;
            txns[i].cumulative_paid = cum;
            txns[i].outstanding = inc - cum;
        };
        set(0, 1, 0.5, EventKind::Major, 100, 0);
        set(1, 1, 1.5, EventKind::Payment, 100, 60);
        set(2, 1, 3.5, EventKind::Minor, 90, 60);
        set(3, 1, 3.8, EventKind::Payment, 90, 90);
        set(4, 2, 2.5, EventKind::Major, 200, 0);
        set(5, 2, 9.5, EventKind::Payment, 200, 200);
        const Triangle paid = aggregate_triangle(claims, txns, AggregateKind::CumulativePaid, 4);
        const Triangle inc = aggregate_triangle(claims, txns, AggregateKind::IncurredEstimate, 4);
        const double want_paid1[] = {0, 60, 60, 90};
        const double want_inc1[] = {100, 100, 100, 90};
        const double want_paid2[] = {0, 0, 0, 200};
        const double want_inc2[] = {0, 200, 200, 200};
        bool hand_ok = true;
        for (int dev = 1; dev <= 4; ++dev) {
            hand_ok = hand_ok && paid.at(1, dev) == want_paid1[dev - 1] &&
                      inc.at(1, dev) == want_inc1[dev - 1] &&
                      paid.at(2, dev) == want_paid2[dev - 1] &&
                      inc.at(2, dev) == want_inc2[dev - 1];
        }

        // Resolution exactness on the full default run.
        long mismatched = runs_ok ? 0 : -1;
        if (runs_ok) {
            for (const AggregateKind kind :
                 {AggregateKind::CumulativePaid, AggregateKind::IncurredEstimate}) {
                const Triangle fine = aggregate_triangle(inflated.claims, inflated.transactions,
                                                         kind, cfg.n_periods, 1);
                const Triangle direct = aggregate_triangle(inflated.claims, inflated.transactions,
                                                           kind, cfg.n_periods, 4);
                const Triangle merged = coarsen_triangle(fine, 4);
                for (int row = 1; row <= direct.rows(); ++row) {
                    for (int dev = 1; dev <= direct.devs(); ++dev) {
                        if (merged.at(row, dev) != direct.at(row, dev)) {
                            ++mismatched;
                        }
                    }
                }
            }
        }
        report(hand_ok && mismatched == 0,
               "development triangles match the worked example and coarsen exactly",
               std::string("worked cells ") + (hand_ok ? "ok" : "OFF") +
                   ", quarter-to-year cell mismatches: " + std::to_string(mismatched));
    } catch (const std::exception& e) {
        report_error("development triangles match the worked example and coarsen exactly", e);
    }

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << (10 - g_failures) << "/10 criteria)" << std::endl;
    return g_failures;
}
