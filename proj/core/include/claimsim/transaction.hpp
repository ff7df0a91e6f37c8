#pragma once

#include "claimsim/consolidate.hpp"
#include "claimsim/paid_loss.hpp"
#include "claimsim/revisions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace claimsim {

/// One emitted transaction row. Money columns are whole currency units
/// (rounded half away from zero); outstanding = incurred - cumulative_paid
/// always holds exactly on the rounded values. `multiplier` is the effective
/// revision factor rounded to 4 decimals, NaN (blank in CSV) for pure
/// payment rows.
struct Transaction {
    long claim_no = 0;            // 1-based, stable across thread counts
    std::int64_t claim_size = 0;  // constant-dollar ultimate, whole units
    double txn_time = 0.0;        // calendar time, periods
    double txn_delay = 0.0;       // periods since notification
    EventKind kind = EventKind::Payment;
    std::int64_t incurred = 0;
    std::int64_t outstanding = 0;
    std::int64_t cumulative_paid = 0;
    double multiplier = 0.0;      // NaN when not a revision
};

/// Short CSV token for a transaction kind ("P", "Ma", "Mi", "PMa", "PMi").
const char* kind_token(EventKind k);

/// Parse a CSV token back into a kind; throws DataError for unknown tokens.
EventKind kind_from_token(const std::string& token);

/// Round a full-precision path into emitted rows for one claim.
std::vector<Transaction> emit_transactions(long claim_no, const ClaimRecord& claim,
                                           const EstimatePath& path);

} // namespace claimsim
