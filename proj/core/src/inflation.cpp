#include "claimsim/inflation.hpp"

#include <algorithm>
#include <cmath>

namespace claimsim {

InflationModel::InflationModel(const SimulationConfig& cfg, bool enabled) : enabled_(enabled) {
    const double per_period = std::pow(1.0 + cfg.inflation.base_annual_rate, cfg.time_unit_years) - 1.0;
    log1p_rate_per_period_ = std::log1p(per_period);

    if (!cfg.inflation.quarterly_rates.empty()) {
        use_quarterly_ = true;
        quarters_per_period_ = cfg.time_unit_years / 0.25;
        log_rate_.reserve(cfg.inflation.quarterly_rates.size());
        log_cum_.reserve(cfg.inflation.quarterly_rates.size() + 1);
        log_cum_.push_back(0.0);
        double acc = 0.0;
        for (double r : cfg.inflation.quarterly_rates) {
            log_rate_.push_back(std::log1p(r));
            acc += log_rate_.back();
            log_cum_.push_back(acc);
        }
    }

    occurrence_ = cfg.inflation.occurrence;
    payment_rate_per_period_ =
        std::pow(1.0 + cfg.inflation.payment.annual_rate, cfg.time_unit_years) - 1.0;
    payment_size_scale_ = cfg.inflation.payment.size_scale;
}

double InflationModel::base_index(double t) const {
    if (!enabled_) {
        return 1.0;
    }
    if (!use_quarterly_) {
        return std::exp(t * log1p_rate_per_period_);
    }
    double q = t * quarters_per_period_;
    if (q <= 0.0) {
        return 1.0;
    }
    const auto n_rates = static_cast<double>(log_rate_.size());
    double full = std::floor(q);
    double frac = q - full;
    double log_index;
    if (full >= n_rates) {
        // Extend the horizon with the last quarterly rate.
        log_index = log_cum_.back() + (q - n_rates) * log_rate_.back();
    } else {
        const auto k = static_cast<std::size_t>(full);
        log_index = log_cum_[k] + frac * log_rate_[k];
    }
    return std::exp(log_index);
}

double InflationModel::occurrence_factor(int period, double size) const {
    if (!enabled_ || !occurrence_.enabled || period <= occurrence_.breakpoint_period) {
        return 1.0;
    }
    const double smallness = std::max(0.0, 1.0 - size / occurrence_.floor_scale);
    return 1.0 - occurrence_.max_reduction * smallness;
}

double InflationModel::payment_factor(double t, double size) const {
    if (!enabled_) {
        return 1.0;
    }
    const double smallness = std::max(0.0, 1.0 - size / payment_size_scale_);
    if (smallness <= 0.0 || payment_rate_per_period_ == 0.0) {
        return 1.0;
    }
    const double rate = payment_rate_per_period_ * smallness;
    return std::exp(t * std::log1p(rate));
}

double InflationModel::inflate_payment(double amount, double t, int period, double size) const {
    if (!enabled_) {
        return amount;
    }
    return amount * base_index(t) * payment_factor(t, size) * occurrence_factor(period, size);
}

} // namespace claimsim
