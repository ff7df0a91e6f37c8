#pragma once

#include "claimsim/simulator.hpp"
#include "claimsim/transaction.hpp"

#include <vector>

namespace claimsim {

/// A square occurrence x development array of aggregated amounts. Cell
/// (row, dev) (1-based) covers claims occurring in aggregate period `row`
/// and transactions falling in development period `dev` (calendar window
/// ((row-1+dev-1) .. (row-1+dev) aggregate periods after the window start,
/// relative to the row's own start). Cells beyond the simulated horizon are
/// filled by clamping: every transaction after the last development window
/// counts toward the last column.
class Triangle {
public:
    Triangle(int rows, int devs, int period_multiple);

    int rows() const { return rows_; }
    int devs() const { return devs_; }
    /// Base periods per aggregate period (1 = native resolution).
    int period_multiple() const { return period_multiple_; }

    double& at(int row, int dev);
    double at(int row, int dev) const;

    /// True for cells on or above the last observed diagonal
    /// (row + dev - 1 <= rows).
    bool observed(int row, int dev) const;

private:
    int rows_;
    int devs_;
    int period_multiple_;
    std::vector<double> cells_;
};

enum class AggregateKind {
    CumulativePaid,   // payments booked in or before the cell's window
    IncurredEstimate, // latest case incurred at or before the window's end
};

/// Aggregate transactions into a cumulative development triangle.
/// `period_multiple` merges that many base periods per aggregate period
/// (e.g. 4 turns quarters into years). Transactions beyond the development
/// horizon clamp into the last column; the incurred triangle carries the
/// previous cell forward through windows without transactions.
Triangle aggregate_triangle(const std::vector<ClaimSummary>& claims,
                            const std::vector<Transaction>& transactions, AggregateKind kind,
                            int n_base_periods, int period_multiple = 1);

/// Re-aggregate a native-resolution (period_multiple == 1) triangle into a
/// coarser one. Exact: equals aggregating the raw transactions at the
/// coarser resolution directly.
Triangle coarsen_triangle(const Triangle& fine, int period_multiple);

/// Ground-truth outstanding amounts per aggregate occurrence period:
/// payments booked after the simulation window's end (calendar time >
/// n_base_periods).
std::vector<double> actual_outstanding_by_period(const std::vector<ClaimSummary>& claims,
                                                 const std::vector<Transaction>& transactions,
                                                 int n_base_periods, int period_multiple = 1);

} // namespace claimsim
