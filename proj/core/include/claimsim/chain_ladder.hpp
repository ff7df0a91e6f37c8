#pragma once

#include "claimsim/transaction.hpp"
#include "claimsim/triangle.hpp"

#include <utility>
#include <vector>

namespace claimsim {

struct ChainLadderResult {
    /// Volume-weighted development factors f_1..f_{J-1}.
    std::vector<double> factors;
    /// Projected ultimate per occurrence row.
    std::vector<double> ultimates;
    /// Ultimate minus cumulative paid on the last observed diagonal.
    std::vector<double> reserves;
};

/// Classic volume-weighted chain ladder on the observed (upper-left) part of
/// the incurred triangle; reserves subtract the paid diagonal. Throws
/// DataError when a development column sums to zero (degenerate input).
ChainLadderResult chain_ladder(const Triangle& incurred, const Triangle& paid);

/// Forecast-vs-actual comparison over occurrence-period bands.
struct DeviationBand {
    int first_period = 0;
    int last_period = 0;
    double actual = 0.0;
    double forecast = 0.0;
    /// Percent deviation 100 * (forecast - actual) / actual; NaN when the
    /// band has no actual outstanding amount.
    double percent = 0.0;
};

struct DeviationReport {
    std::vector<DeviationBand> bands;
    DeviationBand total;
};

/// Compare chain-ladder reserves against ground-truth outstanding amounts
/// (same row count), aggregated into standard bands: rows 1-10, 11-20,
/// 21-25, 26-30, then each remaining row individually.
DeviationReport deviation_report(const ChainLadderResult& cl,
                                 const std::vector<double>& actual_outstanding);

/// How quickly the case estimates approach the ultimate: per occurrence row,
/// incurred at `dev_cutoff` divided by incurred in the last column, plus a
/// centered 5-point moving average (windows shrink at the edges).
struct RecognitionProfile {
    std::vector<double> raw;
    std::vector<double> smoothed;
};

RecognitionProfile recognition_profile(const Triangle& incurred, int dev_cutoff);

/// Effective multiplier pairs (second, third) from claims with exactly two
/// post-notification major revisions, for dependency diagnostics.
std::vector<std::pair<double, double>> major_factor_pairs(const std::vector<Transaction>& transactions);

/// Pearson correlation; throws DataError for fewer than two pairs or zero
/// variance.
double pearson_correlation(const std::vector<std::pair<double, double>>& pairs);

} // namespace claimsim
