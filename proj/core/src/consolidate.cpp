#include "claimsim/consolidate.hpp"

#include "claimsim/errors.hpp"

#include <cmath>
#include <limits>

namespace claimsim {

EstimatePath consolidate_backward(const ClaimRecord& claim, const Timeline& timeline,
                                  const std::vector<double>& amounts, double kappa) {
    const auto& events = timeline.events;
    const std::size_t n = events.size();
    if (n == 0) {
        throw DataError("cannot consolidate an empty timeline");
    }
    if (static_cast<int>(amounts.size()) != claim.n_payments()) {
        throw DataError("payment amounts do not match the claim's payment count");
    }
    const TimelineEvent& last = events.back();
    if (!is_payment(last.kind) || last.payment_index != claim.n_payments() - 1) {
        throw DataError("the timeline must end with the settling payment");
    }

    EstimatePath path;
    path.events.resize(n);
    const double notif_time = claim.notification_time();

    // Cumulative paid after each event; the anchor (settlement estimate) is
    // the same accumulated total bit for bit, so the final outstanding
    // liability is exactly zero.
    std::vector<double> cum_after(n);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (is_payment(events[k].kind)) {
            acc += amounts[static_cast<std::size_t>(events[k].payment_index)];
        }
        cum_after[k] = acc;
    }
    path.anchor = acc;

    // Backward pass: y holds the estimate just after the event under
    // consideration; revisions are inverted to get the estimate just before.
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    double y = path.anchor;
    for (std::size_t idx = n; idx-- > 0;) {
        const TimelineEvent& ev = events[idx];
        PathEvent& row = path.events[idx];
        row.tau = ev.tau;
        row.t_cal = notif_time + ev.tau;
        row.kind = ev.kind;
        row.payment_index = ev.payment_index;
        row.y = y;
        row.c = cum_after[idx];
        row.x = y - cum_after[idx];
        row.multiplier = nan;

        const double c_pre = idx == 0 ? 0.0 : cum_after[idx - 1];
        if (is_major(ev.kind) || is_minor(ev.kind)) {
            // A revision coincident with a payment applies just before it,
            // so the inversion sees the paid total excluding that payment.
            double y_pre;
            if (is_major(ev.kind)) {
                y_pre = y / ev.factor;
            } else {
                y_pre = c_pre + (y - c_pre) / ev.factor;
            }
            double eff = ev.factor;
            if (idx > 0 && kappa * y_pre < c_pre) {
                y_pre = c_pre / kappa;
                ++path.capped_revisions;
                eff = is_major(ev.kind) ? y / y_pre : (y - c_pre) / (y_pre - c_pre);
            }
            row.multiplier = eff;
            y = y_pre;
        }
        // Pure payments leave the estimate unchanged going backward.
    }
    return path;
}

EstimatePath restate_inflated(const EstimatePath& base_path, const std::vector<double>& amounts,
                              const InflationModel& inflation) {
    if (!inflation.enabled()) {
        return base_path;
    }
    EstimatePath out = base_path;
    double nominal_cum = 0.0;
    for (PathEvent& row : out.events) {
        if (row.payment_index >= 0) {
            const double amount = amounts[static_cast<std::size_t>(row.payment_index)];
            nominal_cum += amount * inflation.base_index(row.t_cal);
        }
        row.c = nominal_cum;
        row.x = row.x * inflation.base_index(row.t_cal);
        row.y = row.x + row.c;
    }
    out.anchor = nominal_cum;
    return out;
}

int count_adequacy_violations(const EstimatePath& path, double kappa, double rel_tol) {
    int violations = 0;
    const auto& rows = path.events;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const double y_pre = rows[k - 1].y;
        const double c_pre = rows[k - 1].c;
        if (kappa * y_pre < c_pre * (1.0 - rel_tol)) {
            ++violations;
        }
    }
    return violations;
}

} // namespace claimsim
