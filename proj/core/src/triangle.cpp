#include "claimsim/triangle.hpp"

#include "claimsim/errors.hpp"

#include <cmath>
#include <unordered_map>

namespace claimsim {

Triangle::Triangle(int rows, int devs, int period_multiple)
    : rows_(rows), devs_(devs), period_multiple_(period_multiple),
      cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(devs), 0.0) {
    if (rows < 1 || devs < 1 || period_multiple < 1) {
        throw DataError("triangle dimensions must be positive");
    }
}

double& Triangle::at(int row, int dev) {
    if (row < 1 || row > rows_ || dev < 1 || dev > devs_) {
        throw DataError("triangle cell index out of range");
    }
    return cells_[static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(devs_) +
                  static_cast<std::size_t>(dev - 1)];
}

double Triangle::at(int row, int dev) const {
    return const_cast<Triangle*>(this)->at(row, dev);
}

bool Triangle::observed(int row, int dev) const {
    return row >= 1 && row <= rows_ && dev >= 1 && dev <= devs_ && row + dev - 1 <= rows_;
}

namespace {

struct ClaimIndex {
    std::unordered_map<long, int> period_by_claim;

    explicit ClaimIndex(const std::vector<ClaimSummary>& claims) {
        period_by_claim.reserve(claims.size() * 2);
        for (const ClaimSummary& c : claims) {
            period_by_claim.emplace(c.claim_no, c.occurrence_period);
        }
    }

    int period(long claim_no) const {
        auto it = period_by_claim.find(claim_no);
        if (it == period_by_claim.end()) {
            throw DataError("transaction references claim " + std::to_string(claim_no) +
                            " absent from the claim list");
        }
        return it->second;
    }
};

int aggregate_row(int occurrence_period, int multiple) {
    return (occurrence_period + multiple - 1) / multiple;
}

int development_index(double txn_time, int row, int multiple, int devs) {
    const double start = static_cast<double>((row - 1) * multiple);
    const double raw = std::ceil((txn_time - start) / static_cast<double>(multiple));
    int dev = raw < 1.0 ? 1 : static_cast<int>(raw);
    if (dev > devs) {
        dev = devs; // overflow beyond the horizon accrues to the last column
    }
    return dev;
}

} // namespace

Triangle aggregate_triangle(const std::vector<ClaimSummary>& claims,
                            const std::vector<Transaction>& transactions, AggregateKind kind,
                            int n_base_periods, int period_multiple) {
    if (period_multiple < 1) {
        throw DataError("period_multiple must be at least 1");
    }
    const int rows = (n_base_periods + period_multiple - 1) / period_multiple;
    Triangle tri(rows, rows, period_multiple);
    const ClaimIndex index(claims);

    // Book per-cell deltas, then accumulate along development. For paid
    // cells the delta is the payment increment; for incurred cells it is the
    // change in the case estimate, so the running sum holds each claim's
    // latest estimate (carried forward through quiet windows).
    long current_claim = -1;
    int current_row = 0;
    std::int64_t prev_value = 0;
    for (const Transaction& txn : transactions) {
        if (txn.claim_no != current_claim) {
            current_claim = txn.claim_no;
            current_row = aggregate_row(index.period(txn.claim_no), period_multiple);
            prev_value = 0;
        }
        const std::int64_t value =
            kind == AggregateKind::CumulativePaid ? txn.cumulative_paid : txn.incurred;
        const std::int64_t delta = value - prev_value;
        prev_value = value;
        if (delta == 0) {
            continue;
        }
        const int dev = development_index(txn.txn_time, current_row, period_multiple, rows);
        tri.at(current_row, dev) += static_cast<double>(delta);
    }
    for (int row = 1; row <= rows; ++row) {
        double acc = 0.0;
        for (int dev = 1; dev <= rows; ++dev) {
            acc += tri.at(row, dev);
            tri.at(row, dev) = acc;
        }
    }
    return tri;
}

Triangle coarsen_triangle(const Triangle& fine, int period_multiple) {
    if (fine.period_multiple() != 1) {
        throw DataError("coarsen_triangle requires a native-resolution triangle");
    }
    if (period_multiple < 1) {
        throw DataError("period_multiple must be at least 1");
    }
    const int m = period_multiple;
    const int rows = (fine.rows() + m - 1) / m;
    const int devs = (fine.devs() + m - 1) / m;
    Triangle coarse(rows, devs, m);
    for (int o = 1; o <= rows; ++o) {
        for (int d = 1; d <= devs; ++d) {
            double sum = 0.0;
            for (int pos = 1; pos <= m; ++pos) {
                const int i = (o - 1) * m + pos;
                if (i > fine.rows()) {
                    break;
                }
                // The coarse cell reads each base row at the same calendar
                // instant; the final coarse column must swallow the overflow
                // bucket, i.e. read each base row's last column.
                const int col = d == devs ? fine.devs() : d * m - pos + 1;
                sum += fine.at(i, col);
            }
            coarse.at(o, d) = sum;
        }
    }
    return coarse;
}

std::vector<double> actual_outstanding_by_period(const std::vector<ClaimSummary>& claims,
                                                 const std::vector<Transaction>& transactions,
                                                 int n_base_periods, int period_multiple) {
    const int rows = (n_base_periods + period_multiple - 1) / period_multiple;
    std::vector<double> outstanding(static_cast<std::size_t>(rows), 0.0);
    const ClaimIndex index(claims);
    const double cutoff = static_cast<double>(n_base_periods);

    long current_claim = -1;
    int current_row = 0;
    std::int64_t prev_paid = 0;
    for (const Transaction& txn : transactions) {
        if (txn.claim_no != current_claim) {
            current_claim = txn.claim_no;
            current_row = aggregate_row(index.period(txn.claim_no), period_multiple);
            prev_paid = 0;
        }
        const std::int64_t delta = txn.cumulative_paid - prev_paid;
        prev_paid = txn.cumulative_paid;
        if (delta != 0 && txn.txn_time > cutoff) {
            outstanding[static_cast<std::size_t>(current_row - 1)] += static_cast<double>(delta);
        }
    }
    return outstanding;
}

} // namespace claimsim
