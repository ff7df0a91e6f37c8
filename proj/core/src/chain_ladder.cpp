#include "claimsim/chain_ladder.hpp"

#include "claimsim/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace claimsim {

ChainLadderResult chain_ladder(const Triangle& incurred, const Triangle& paid) {
    if (incurred.rows() != paid.rows() || incurred.devs() != paid.devs()) {
        throw DataError("incurred and paid triangles must have matching shapes");
    }
    const int n = incurred.rows();
    const int devs = incurred.devs();
    if (devs != n) {
        throw DataError("chain ladder expects a square triangle");
    }

    ChainLadderResult result;
    result.factors.reserve(static_cast<std::size_t>(devs - 1));
    for (int dev = 1; dev < devs; ++dev) {
        // Rows with both (row, dev) and (row, dev+1) observed.
        double num = 0.0;
        double den = 0.0;
        for (int row = 1; row + dev <= n; ++row) {
            num += incurred.at(row, dev + 1);
            den += incurred.at(row, dev);
        }
        if (den == 0.0) {
            throw DataError("chain ladder: zero column sum at development " + std::to_string(dev));
        }
        result.factors.push_back(num / den);
    }

    result.ultimates.resize(static_cast<std::size_t>(n));
    result.reserves.resize(static_cast<std::size_t>(n));
    for (int row = 1; row <= n; ++row) {
        const int diag_dev = n - row + 1;
        double ultimate = incurred.at(row, diag_dev);
        for (int dev = diag_dev; dev < devs; ++dev) {
            ultimate *= result.factors[static_cast<std::size_t>(dev - 1)];
        }
        result.ultimates[static_cast<std::size_t>(row - 1)] = ultimate;
        result.reserves[static_cast<std::size_t>(row - 1)] = ultimate - paid.at(row, diag_dev);
    }
    return result;
}

DeviationReport deviation_report(const ChainLadderResult& cl,
                                 const std::vector<double>& actual_outstanding) {
    const int n = static_cast<int>(cl.reserves.size());
    if (static_cast<int>(actual_outstanding.size()) != n) {
        throw DataError("actual outstanding vector does not match the reserve row count");
    }

    std::vector<std::pair<int, int>> spans;
    int row = 1;
    for (auto span : {std::pair<int, int>{1, 10}, {11, 20}, {21, 25}, {26, 30}}) {
        if (row > n) {
            break;
        }
        if (span.first <= n) {
            spans.emplace_back(span.first, std::min(span.second, n));
            row = spans.back().second + 1;
        }
    }
    for (; row <= n; ++row) {
        spans.emplace_back(row, row);
    }

    auto make_band = [&](int first, int last) {
        DeviationBand band;
        band.first_period = first;
        band.last_period = last;
        for (int r = first; r <= last; ++r) {
            band.forecast += cl.reserves[static_cast<std::size_t>(r - 1)];
            band.actual += actual_outstanding[static_cast<std::size_t>(r - 1)];
        }
        band.percent = band.actual != 0.0
                           ? 100.0 * (band.forecast - band.actual) / band.actual
                           : std::numeric_limits<double>::quiet_NaN();
        return band;
    };

    DeviationReport report;
    for (auto [first, last] : spans) {
        report.bands.push_back(make_band(first, last));
    }
    report.total = make_band(1, n);
    return report;
}

RecognitionProfile recognition_profile(const Triangle& incurred, int dev_cutoff) {
    if (dev_cutoff < 1 || dev_cutoff > incurred.devs()) {
        throw DataError("recognition profile cutoff outside the triangle");
    }
    const int n = incurred.rows();
    RecognitionProfile profile;
    profile.raw.resize(static_cast<std::size_t>(n));
    for (int row = 1; row <= n; ++row) {
        const double ultimate = incurred.at(row, incurred.devs());
        profile.raw[static_cast<std::size_t>(row - 1)] =
            ultimate != 0.0 ? incurred.at(row, dev_cutoff) / ultimate
                            : std::numeric_limits<double>::quiet_NaN();
    }
    profile.smoothed.resize(static_cast<std::size_t>(n));
    constexpr int radius = 2; // centered 5-point window, shrinking at edges
    for (int row = 1; row <= n; ++row) {
        double sum = 0.0;
        int count = 0;
        for (int k = std::max(1, row - radius); k <= std::min(n, row + radius); ++k) {
            const double v = profile.raw[static_cast<std::size_t>(k - 1)];
            if (!std::isnan(v)) {
                sum += v;
                ++count;
            }
        }
        profile.smoothed[static_cast<std::size_t>(row - 1)] =
            count > 0 ? sum / count : std::numeric_limits<double>::quiet_NaN();
    }
    return profile;
}

std::vector<std::pair<double, double>> major_factor_pairs(
    const std::vector<Transaction>& transactions) {
    std::vector<std::pair<double, double>> pairs;
    long current_claim = -1;
    std::vector<double> factors;
    auto flush = [&]() {
        if (factors.size() == 2) {
            pairs.emplace_back(factors[0], factors[1]);
        }
        factors.clear();
    };
    for (const Transaction& txn : transactions) {
        if (txn.claim_no != current_claim) {
            flush();
            current_claim = txn.claim_no;
        }
        if (is_major(txn.kind) && txn.txn_delay > 0.0 && !std::isnan(txn.multiplier)) {
            factors.push_back(txn.multiplier);
        }
    }
    flush();
    return pairs;
}

double pearson_correlation(const std::vector<std::pair<double, double>>& pairs) {
    const std::size_t n = pairs.size();
    if (n < 2) {
        throw DataError("correlation requires at least two pairs");
    }
    double mx = 0.0;
    double my = 0.0;
    for (const auto& [x, y] : pairs) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (const auto& [x, y] : pairs) {
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DataError("correlation undefined: zero variance");
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace claimsim
