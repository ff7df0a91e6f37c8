#pragma once

#include "claimsim/simulator.hpp"
#include "claimsim/transaction.hpp"
#include "claimsim/triangle.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace claimsim {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

/// Parse a full double; throws DataError on malformed text.
double parse_double(const std::string& text);

// transactions.csv ----------------------------------------------------------
// Header: claim_no,claim_size,txn_time,txn_delay,txn_type,incurred,OCL,cumpaid,multiplier
// Money as whole units, times in full precision, multiplier blank for pure
// payments. write/parse round-trip exactly.

void write_transactions_csv(std::ostream& out, const std::vector<Transaction>& transactions);
std::vector<Transaction> parse_transactions_csv(std::istream& in);

// claims.csv ----------------------------------------------------------------
// Header: claim_no,occurrence_period,occurrence_time,notification_delay,
//         settlement_delay,claim_size,n_payments

void write_claims_csv(std::ostream& out, const std::vector<ClaimSummary>& claims);
std::vector<ClaimSummary> parse_claims_csv(std::istream& in);

// triangles -----------------------------------------------------------------
// Header: period,dev1,dev2,...; one row per occurrence period.

void write_triangle_csv(std::ostream& out, const Triangle& triangle);

// File helpers (throw IoError on failure) ------------------------------------

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

std::string transactions_csv_text(const std::vector<Transaction>& transactions);
std::string claims_csv_text(const std::vector<ClaimSummary>& claims);

std::vector<Transaction> load_transactions_csv(const std::string& path);
std::vector<ClaimSummary> load_claims_csv(const std::string& path);

/// Rebuild paid-loss histories from emitted transactions, for running the
/// revision/consolidation pipeline over external payment data. Payment rows
/// define the schedules; the claim list supplies occurrence periods and
/// delays. Claims are indexed within periods in claim-number order.
std::vector<ClaimRecord> claims_from_transactions(const std::vector<ClaimSummary>& claims,
                                                  const std::vector<Transaction>& transactions);

} // namespace claimsim
