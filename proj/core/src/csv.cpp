#include "claimsim/csv.hpp"

#include "claimsim/errors.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>
#include <unordered_map>

namespace claimsim {

namespace {

const char* kTransactionsHeader =
    "claim_no,claim_size,txn_time,txn_delay,txn_type,incurred,OCL,cumpaid,multiplier";
const char* kClaimsHeader =
    "claim_no,occurrence_period,occurrence_time,notification_delay,settlement_delay,"
    "claim_size,n_payments";

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string chomp(std::string line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
        line.pop_back();
    }
    return line;
}

long parse_long(const std::string& text, const char* what) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw DataError(std::string("malformed ") + what + " '" + text + "'");
    }
    return value;
}

std::int64_t parse_money(const std::string& text, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw DataError(std::string("malformed ") + what + " '" + text + "'");
    }
    return value;
}

} // namespace

std::string format_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    if (text.empty()) {
        throw DataError("empty numeric field");
    }
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE) {
        throw DataError("malformed number '" + text + "'");
    }
    return value;
}

void write_transactions_csv(std::ostream& out, const std::vector<Transaction>& transactions) {
    out << kTransactionsHeader << '\n';
    for (const Transaction& t : transactions) {
        out << t.claim_no << ',' << t.claim_size << ',' << format_double(t.txn_time) << ','
            << format_double(t.txn_delay) << ',' << kind_token(t.kind) << ',' << t.incurred << ','
            << t.outstanding << ',' << t.cumulative_paid << ',';
        if (!std::isnan(t.multiplier)) {
            out << format_double(t.multiplier);
        }
        out << '\n';
    }
}

std::vector<Transaction> parse_transactions_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || chomp(line) != kTransactionsHeader) {
        throw DataError("transactions CSV: missing or unexpected header");
    }
    std::vector<Transaction> rows;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (line.empty()) {
            continue;
        }
        const auto fields = split_line(line);
        if (fields.size() != 9) {
            throw DataError("transactions CSV line " + std::to_string(line_no) +
                            ": expected 9 fields, got " + std::to_string(fields.size()));
        }
        Transaction t;
        t.claim_no = parse_long(fields[0], "claim_no");
        t.claim_size = parse_money(fields[1], "claim_size");
        t.txn_time = parse_double(fields[2]);
        t.txn_delay = parse_double(fields[3]);
        t.kind = kind_from_token(fields[4]);
        t.incurred = parse_money(fields[5], "incurred");
        t.outstanding = parse_money(fields[6], "OCL");
        t.cumulative_paid = parse_money(fields[7], "cumpaid");
        t.multiplier = fields[8].empty() ? std::numeric_limits<double>::quiet_NaN()
                                         : parse_double(fields[8]);
        rows.push_back(t);
    }
    return rows;
}

void write_claims_csv(std::ostream& out, const std::vector<ClaimSummary>& claims) {
    out << kClaimsHeader << '\n';
    for (const ClaimSummary& c : claims) {
        out << c.claim_no << ',' << c.occurrence_period << ',' << format_double(c.occurrence_time)
            << ',' << format_double(c.notification_delay) << ','
            << format_double(c.settlement_delay) << ',' << format_double(c.claim_size) << ','
            << c.n_payments << '\n';
    }
}

std::vector<ClaimSummary> parse_claims_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || chomp(line) != kClaimsHeader) {
        throw DataError("claims CSV: missing or unexpected header");
    }
    std::vector<ClaimSummary> rows;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (line.empty()) {
            continue;
        }
        const auto fields = split_line(line);
        if (fields.size() != 7) {
            throw DataError("claims CSV line " + std::to_string(line_no) +
                            ": expected 7 fields, got " + std::to_string(fields.size()));
        }
        ClaimSummary c;
        c.claim_no = parse_long(fields[0], "claim_no");
        c.occurrence_period = static_cast<int>(parse_long(fields[1], "occurrence_period"));
        c.occurrence_time = parse_double(fields[2]);
        c.notification_delay = parse_double(fields[3]);
        c.settlement_delay = parse_double(fields[4]);
        c.claim_size = parse_double(fields[5]);
        c.n_payments = static_cast<int>(parse_long(fields[6], "n_payments"));
        rows.push_back(c);
    }
    return rows;
}

void write_triangle_csv(std::ostream& out, const Triangle& triangle) {
    out << "period";
    for (int dev = 1; dev <= triangle.devs(); ++dev) {
        out << ",dev" << dev;
    }
    out << '\n';
    for (int row = 1; row <= triangle.rows(); ++row) {
        out << row;
        for (int dev = 1; dev <= triangle.devs(); ++dev) {
            out << ',' << format_double(triangle.at(row, dev));
        }
        out << '\n';
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
        throw IoError("failed while writing '" + path + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed while reading '" + path + "'");
    }
    return buf.str();
}

std::string transactions_csv_text(const std::vector<Transaction>& transactions) {
    std::ostringstream out;
    write_transactions_csv(out, transactions);
    return out.str();
}

std::string claims_csv_text(const std::vector<ClaimSummary>& claims) {
    std::ostringstream out;
    write_claims_csv(out, claims);
    return out.str();
}

std::vector<Transaction> load_transactions_csv(const std::string& path) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    return parse_transactions_csv(in);
}

std::vector<ClaimSummary> load_claims_csv(const std::string& path) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    return parse_claims_csv(in);
}

std::vector<ClaimRecord> claims_from_transactions(const std::vector<ClaimSummary>& claims,
                                                  const std::vector<Transaction>& transactions) {
    std::vector<ClaimRecord> records;
    records.reserve(claims.size());
    std::unordered_map<long, std::size_t> index;
    std::unordered_map<int, int> next_index_in_period;
    index.reserve(claims.size() * 2);
    for (const ClaimSummary& c : claims) {
        ClaimRecord rec;
        rec.occurrence_period = c.occurrence_period;
        rec.index_in_period = next_index_in_period[c.occurrence_period]++;
        rec.occurrence_time = c.occurrence_time;
        rec.notification_delay = c.notification_delay;
        rec.settlement_delay = c.settlement_delay;
        rec.size = c.claim_size;
        index.emplace(c.claim_no, records.size());
        records.push_back(std::move(rec));
    }
    for (const Transaction& t : transactions) {
        if (!is_payment(t.kind)) {
            continue;
        }
        auto it = index.find(t.claim_no);
        if (it == index.end()) {
            throw DataError("transaction references claim " + std::to_string(t.claim_no) +
                            " absent from the claim list");
        }
        records[it->second].payment_delays.push_back(t.txn_delay);
    }
    // Amounts: successive differences of cumulative paid per claim.
    std::unordered_map<long, std::int64_t> prev_paid;
    prev_paid.reserve(claims.size() * 2);
    for (const Transaction& t : transactions) {
        if (!is_payment(t.kind)) {
            continue;
        }
        auto& prev = prev_paid[t.claim_no];
        const std::int64_t amount = t.cumulative_paid - prev;
        prev = t.cumulative_paid;
        records[index.at(t.claim_no)].payment_amounts.push_back(static_cast<double>(amount));
    }
    for (ClaimRecord& rec : records) {
        if (rec.payment_delays.empty()) {
            throw DataError("claim without payment rows in the transaction data");
        }
        // The schedule must end at settlement; trust the payments over the
        // claim list when they disagree.
        rec.settlement_delay = rec.payment_delays.back();
        double total = 0.0;
        for (double a : rec.payment_amounts) {
            total += a;
        }
        if (!(total > 0.0)) {
            throw DataError("claim with non-positive total paid in the transaction data");
        }
        rec.size = total;
    }
    return records;
}

} // namespace claimsim
