#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace claimsim {

/// Claim-level inflation tied to the occurrence period: small claims
/// occurring after `breakpoint_period` are scaled down (e.g. a scheme change
/// that reduces minor-injury awards). Factor:
///   1                                          if i <= breakpoint_period
///   1 - max_reduction * max(0, 1 - s/floor_scale)   otherwise.
struct OccurrenceInflationConfig {
    bool enabled = true;
    int breakpoint_period = 20;
    double floor_scale = 50000.0;
    double max_reduction = 0.4;
};

/// Claim-level superimposed inflation tied to the payment epoch: payments on
/// small claims grow faster than the base index. With per-period rate
/// g = (1 + annual_rate)^time_unit_years - 1, a payment at calendar time t on
/// a claim of size s carries factor (1 + g * max(0, 1 - s/size_scale))^t.
struct PaymentInflationConfig {
    double annual_rate = 0.30;
    double size_scale = 200000.0;
};

struct InflationConfig {
    /// Base economy-wide annual rate, compounded continuously over periods:
    /// index(t) = (1 + base_annual_rate)^(t * time_unit_years).
    double base_annual_rate = 0.02;
    /// Optional per-quarter rate path. When non-empty it replaces the
    /// constant base rate: the index compounds one entry per calendar
    /// quarter and interpolates exponentially inside a quarter. Horizons
    /// beyond the last entry extend it.
    std::vector<double> quarterly_rates;
    OccurrenceInflationConfig occurrence;
    PaymentInflationConfig payment;
};

/// Knobs for the paid-loss process (sizes, delays, partial payments).
struct PaidLossConfig {
    // Claim size: exp(N(size_log_mean, size_log_sd^2)) capped at size_cap.
    double size_log_mean = 9.5;
    double size_log_sd = 1.6;
    double size_cap = 5000000.0;

    // Notification delay: Exponential(mean = notification_mean) periods,
    // floored at min_delay.
    double notification_mean = 0.5;

    // Settlement delay: lognormal in periods with size-dependent log-mean
    //   min(settle_log_base + settle_log_slope * ln(1 + s/reference_size),
    //       ln(settle_median_cap))
    // and log-sd settle_log_sd, hard-capped at settle_hard_cap.
    double settle_log_base = 2.2;
    double settle_log_slope = 1.25;
    double settle_median_cap = 40.0;
    double settle_log_sd = 0.5;
    double settle_hard_cap = 60.0;

    // Number of partial payments:
    //   max(1, round(1 + payment_count_scale * ln(1 + s/payment_count_size_scale) + N(0,1))).
    double payment_count_scale = 1.5;
    double payment_count_size_scale = 15000.0;

    // Payment proportions for m >= 3: the last payment takes
    // U(last_share_min, last_share_max) of the claim, the first m-2 payments
    // split a pot of U(early_pot_min, early_pot_max) with relative weights
    // U(early_weight_min, early_weight_max), and the second-to-last payment
    // takes the remainder (always the largest share). For m == 2 the last
    // payment takes U(last_share_min, last_share_max); m == 1 pays in full.
    double last_share_min = 0.05;
    double last_share_max = 0.15;
    double early_pot_min = 0.2;
    double early_pot_max = 0.3;
    double early_weight_min = 0.85;
    double early_weight_max = 1.15;

    // Payment epochs: near-even spacing of the settlement delay with
    // +/- epoch_jitter relative jitter per gap; the last payment lands
    // exactly at settlement.
    double epoch_jitter = 0.3;

    // Lower bound for delays (keeps every transaction strictly after
    // notification).
    double min_delay = 1e-6;
};

/// Major revisions: large multiplicative jumps of the incurred estimate.
struct MajorRevisionConfig {
    // Number of majors K in {1,2,3}; K = 1 when s <= size_threshold or the
    // claim has fewer than min_payments payments, otherwise
    //   P(K=2) = p2_base + p2_slope * min(1, (s - size_threshold)/size_span)
    //   P(K=3) = p3_slope * min(1, (s - size_threshold)/size_span).
    double size_threshold = 15000.0;
    double size_span = 185000.0;
    double p2_base = 0.1;
    double p2_slope = 0.3;
    double p3_slope = 0.5;
    int min_payments = 4;

    // Probability that the last major coincides with the second-to-last
    // payment: coincidence_base * min(1, max(0, s - coincidence_threshold)
    // / coincidence_span).
    double coincidence_base = 0.2;
    double coincidence_threshold = 200000.0;
    double coincidence_span = 2800000.0;

    // Revision multipliers: ln g2 ~ N(factor2_log_mean, factor_log_sd^2),
    // ln g3 ~ N(factor3_base + factor3_slope * (factor3_anchor - g2),
    //           factor_log_sd^2).
    double factor2_log_mean = 1.8;
    double factor_log_sd = 0.2;
    double factor3_base = 1.0;
    double factor3_slope = 0.07;
    double factor3_anchor = 6.0;
};

/// Minor revisions: small multiplicative adjustments of the outstanding
/// liability.
struct MinorRevisionConfig {
    // Each partial payment (except the settling one) is accompanied by a
    // minor revision with probability at_payment_prob.
    double at_payment_prob = 0.5;

    // Free minors: Geometric count on {0,1,...} with mean
    // min(free_mean_cap, w / free_mean_divisor), epochs
    // U(w / epoch_min_divisor, w).
    double free_mean_cap = 3.0;
    double free_mean_divisor = 4.0;
    double epoch_min_divisor = 6.0;

    // ln g ~ N(mu, sd^2) with mu depending on the revision time within the
    // claim's life (early / middle / late thirds) and sd smaller once a
    // post-notification major has already occurred.
    double mu_early = 0.15;
    double mu_mid = 0.0;
    double mu_late = -0.1;
    double sd_after_major = 0.05;
    double sd_default = 0.1;
};

struct SimulationConfig {
    /// Length of one development/occurrence period in years (0.25 = quarter).
    double time_unit_years = 0.25;
    /// Number of occurrence periods I (and development periods).
    int n_periods = 40;
    /// Reference claim size used by size-dependent formulas.
    double reference_size = 200000.0;
    /// Case-estimate adequacy floor: incurred >= kappa-consistency requires
    /// estimates y with kappa * y >= cumulative paid at every pre-transaction
    /// state.
    double kappa = 0.95;

    /// Exposure per occurrence period (length 1 => constant, else length I).
    std::vector<double> exposure{5000.0};
    /// Expected claim frequency per unit exposure per period.
    std::vector<double> frequency{0.10};

    std::uint64_t master_seed = 20210823ULL;

    /// "default_heterogeneous" keeps all heterogeneity switched on;
    /// "homogeneous" collapses exposure/frequency to their period-1 values
    /// and disables claim-level (occurrence + payment) inflation so that all
    /// occurrence periods are statistically identical.
    std::string preset = "default_heterogeneous";

    PaidLossConfig paid_loss;
    MajorRevisionConfig major;
    MinorRevisionConfig minor;
    InflationConfig inflation;

    /// Exposure for occurrence period i (1-based).
    double exposure_at(int period) const;
    /// Frequency for occurrence period i (1-based).
    double frequency_at(int period) const;
};

/// The built-in defaults (equivalent to loading an empty JSON document).
SimulationConfig default_config();

/// Parse a JSON document (text). Unspecified fields keep their defaults.
/// Throws ConfigError on malformed JSON, unknown keys, or invalid values.
SimulationConfig config_from_json_text(const std::string& text);

/// Load and parse a JSON config file. Throws IoError if unreadable,
/// ConfigError if invalid.
SimulationConfig load_config_file(const std::string& path);

/// Serialize back to a canonical JSON text (sorted keys, explicit values for
/// every field). Parsing the result reproduces the config exactly.
std::string config_to_json_text(const SimulationConfig& cfg);

/// Validate field ranges and cross-field consistency; throws ConfigError
/// whose message names the offending field.
void validate(const SimulationConfig& cfg);

/// Apply the named preset's overrides in place (no-op for
/// "default_heterogeneous"). Throws ConfigError for unknown names.
void apply_preset(SimulationConfig& cfg);

/// Stable 64-bit hash of the canonical JSON serialization, hex-encoded.
std::string config_hash(const SimulationConfig& cfg);

} // namespace claimsim
