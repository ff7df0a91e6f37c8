#pragma once

#include "claimsim/inflation.hpp"
#include "claimsim/paid_loss.hpp"
#include "claimsim/revisions.hpp"

#include <vector>

namespace claimsim {

/// One resolved transaction of a claim, with full-precision post-transaction
/// state. `y` is the incurred estimate, `c` the cumulative paid amount and
/// `x` = y - c the outstanding claim liability, all in the dollar basis of
/// the path that owns the row.
struct PathEvent {
    double tau = 0.0;         // delay from notification, periods
    double t_cal = 0.0;       // calendar time, periods from window start
    EventKind kind = EventKind::Payment;
    int payment_index = -1;
    double y = 0.0;
    double x = 0.0;
    double c = 0.0;
    /// Effective revision multiplier actually applied (adequacy-capped when
    /// the sampled factor would have pushed the estimate below cumulative
    /// payments / kappa). NaN for rows that carry no revision.
    double multiplier = 0.0;
};

struct EstimatePath {
    std::vector<PathEvent> events;
    /// Final estimate at settlement == total paid in this path's basis.
    double anchor = 0.0;
    /// Number of revisions whose sampled factor was adequacy-capped.
    int capped_revisions = 0;
};

/// Consolidate case estimates backward from settlement.
///
/// `amounts` are the partial payment amounts in the chosen dollar basis (one
/// per payment, aligned with the timeline's payment indices). The settlement
/// estimate anchors at the total paid; each revision, walked backward,
/// divides the estimate (majors scale the incurred, minors scale the
/// outstanding), with a revision occurring together with a payment applied
/// immediately before that payment. Every pre-transaction estimate y must
/// satisfy kappa * y >= cumulative paid; offending factors are capped and
/// the effective multiplier recorded.
EstimatePath consolidate_backward(const ClaimRecord& claim, const Timeline& timeline,
                                  const std::vector<double>& amounts, double kappa);

/// Restate a consolidated path in fully inflated dollars.
///
/// `base_path` must be the result of consolidate_backward over `amounts`
/// (payment amounts carrying any claim-level inflation, in time-zero
/// dollars). The restated path books each payment at its nominal value
/// (amount times base index at the payment date) and inflates the
/// outstanding part of every estimate by the base index at the transaction
/// date:
///     c'(row) = sum of nominal payments so far,
///     x'(row) = x(row) * base_index(t_row),
///     y'(row) = x'(row) + c'(row).
/// Multipliers are unchanged. With inflation disabled this returns the path
/// unchanged.
EstimatePath restate_inflated(const EstimatePath& base_path, const std::vector<double>& amounts,
                              const InflationModel& inflation);

/// Count pre-transaction states violating kappa * y >= c beyond a relative
/// floating-point tolerance. Zero for every path this module produces.
int count_adequacy_violations(const EstimatePath& path, double kappa, double rel_tol = 1e-9);

} // namespace claimsim
