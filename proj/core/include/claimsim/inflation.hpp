#pragma once

#include "claimsim/config.hpp"

#include <vector>

namespace claimsim {

/// Deterministic inflation machinery. Times are measured in periods from the
/// start of the simulation window (calendar time); claim sizes are in
/// constant (time-zero) dollars.
///
/// Three multiplicative layers apply to a payment of constant-dollar amount
/// a, made at calendar time t, on a claim of size s occurring in period i:
///
///   inflated = a * base_index(t) * payment_factor(t, s) * occurrence_factor(i, s)
///
/// A model constructed with enabled == false returns 1 for every factor
/// (constant-dollar output).
class InflationModel {
public:
    InflationModel(const SimulationConfig& cfg, bool enabled);

    bool enabled() const { return enabled_; }

    /// Economy-wide index at calendar time t (periods); index(0) == 1.
    double base_index(double t) const;

    /// Claim-level factor tied to the occurrence period (1-based).
    double occurrence_factor(int period, double size) const;

    /// Claim-level factor tied to the payment epoch.
    double payment_factor(double t, double size) const;

    /// All three layers combined and applied to an amount.
    double inflate_payment(double amount, double t, int period, double size) const;

private:
    bool enabled_ = true;
    // Base layer: either a constant per-period rate...
    double log1p_rate_per_period_ = 0.0;
    // ...or a quarterly rate path (log cumulative index at quarter ends).
    bool use_quarterly_ = false;
    double quarters_per_period_ = 1.0;
    std::vector<double> log_cum_; // log_cum_[k] = log index after k full quarters
    std::vector<double> log_rate_; // log(1 + r_k) per quarter
    // Claim-level layers.
    OccurrenceInflationConfig occurrence_;
    double payment_rate_per_period_ = 0.0;
    double payment_size_scale_ = 1.0;
};

} // namespace claimsim
