#include "claimsim/transaction.hpp"

#include "claimsim/errors.hpp"

#include <cmath>
#include <limits>

namespace claimsim {

const char* kind_token(EventKind k) {
    switch (k) {
    case EventKind::Payment:
        return "P";
    case EventKind::Major:
        return "Ma";
    case EventKind::Minor:
        return "Mi";
    case EventKind::PaymentMajor:
        return "PMa";
    case EventKind::PaymentMinor:
        return "PMi";
    }
    return "?";
}

EventKind kind_from_token(const std::string& token) {
    if (token == "P") {
        return EventKind::Payment;
    }
    if (token == "Ma") {
        return EventKind::Major;
    }
    if (token == "Mi") {
        return EventKind::Minor;
    }
    if (token == "PMa") {
        return EventKind::PaymentMajor;
    }
    if (token == "PMi") {
        return EventKind::PaymentMinor;
    }
    throw DataError("unknown transaction type token '" + token + "'");
}

std::vector<Transaction> emit_transactions(long claim_no, const ClaimRecord& claim,
                                           const EstimatePath& path) {
    std::vector<Transaction> rows;
    rows.reserve(path.events.size());
    const auto size_units = static_cast<std::int64_t>(std::llround(claim.size));
    for (const PathEvent& ev : path.events) {
        Transaction t;
        t.claim_no = claim_no;
        t.claim_size = size_units;
        t.txn_time = ev.t_cal;
        t.txn_delay = ev.tau;
        t.kind = ev.kind;
        t.incurred = static_cast<std::int64_t>(std::llround(ev.y));
        t.cumulative_paid = static_cast<std::int64_t>(std::llround(ev.c));
        // Outstanding derives from the rounded columns so the identity
        // incurred == outstanding + cumulative_paid survives rounding.
        t.outstanding = t.incurred - t.cumulative_paid;
        if (std::isnan(ev.multiplier)) {
            t.multiplier = std::numeric_limits<double>::quiet_NaN();
        } else {
            t.multiplier = std::round(ev.multiplier * 10000.0) / 10000.0;
        }
        rows.push_back(t);
    }
    return rows;
}

} // namespace claimsim
