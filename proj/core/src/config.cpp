#include "claimsim/config.hpp"

#include "claimsim/errors.hpp"
#include "claimsim/rng.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace claimsim {

namespace {

using nlohmann::json;

double expect_number(const json& j, const std::string& field) {
    if (!j.is_number()) {
        throw ConfigError("config field '" + field + "' must be a number");
    }
    return j.get<double>();
}

void read_number(const json& obj, const std::string& prefix, const char* key, double& out) {
    if (auto it = obj.find(key); it != obj.end()) {
        out = expect_number(*it, prefix + key);
    }
}

void read_int(const json& obj, const std::string& prefix, const char* key, int& out) {
    if (auto it = obj.find(key); it != obj.end()) {
        const std::string field = prefix + key;
        if (!it->is_number_integer()) {
            throw ConfigError("config field '" + field + "' must be an integer");
        }
        out = it->get<int>();
    }
}

void read_bool(const json& obj, const std::string& prefix, const char* key, bool& out) {
    if (auto it = obj.find(key); it != obj.end()) {
        if (!it->is_boolean()) {
            throw ConfigError("config field '" + prefix + key + "' must be a boolean");
        }
        out = it->get<bool>();
    }
}

// Accept either a scalar (constant across periods) or an array of numbers.
void read_profile(const json& obj, const std::string& prefix, const char* key,
                  std::vector<double>& out) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        return;
    }
    const std::string field = prefix + key;
    if (it->is_number()) {
        out.assign(1, it->get<double>());
        return;
    }
    if (!it->is_array()) {
        throw ConfigError("config field '" + field + "' must be a number or an array of numbers");
    }
    out.clear();
    for (const auto& v : *it) {
        if (!v.is_number()) {
            throw ConfigError("config field '" + field + "' must contain only numbers");
        }
        out.push_back(v.get<double>());
    }
}

void require_known_keys(const json& obj, const std::string& prefix,
                        std::initializer_list<const char*> known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool found = false;
        for (const char* k : known) {
            if (it.key() == k) {
                found = true;
                break;
            }
        }
        if (!found) {
            throw ConfigError("unknown config field '" + prefix + it.key() + "'");
        }
    }
}

void parse_inflation(const json& obj, InflationConfig& infl) {
    const std::string p = "inflation.";
    require_known_keys(obj, p, {"base_annual_rate", "quarterly_rates", "occurrence", "payment"});
    read_number(obj, p, "base_annual_rate", infl.base_annual_rate);
    if (auto it = obj.find("quarterly_rates"); it != obj.end()) {
        if (!it->is_array()) {
            throw ConfigError("config field 'inflation.quarterly_rates' must be an array");
        }
        infl.quarterly_rates.clear();
        for (const auto& v : *it) {
            infl.quarterly_rates.push_back(expect_number(v, p + "quarterly_rates[]"));
        }
    }
    if (auto it = obj.find("occurrence"); it != obj.end()) {
        const std::string po = p + "occurrence.";
        require_known_keys(*it, po, {"enabled", "breakpoint_period", "floor_scale", "max_reduction"});
        read_bool(*it, po, "enabled", infl.occurrence.enabled);
        read_int(*it, po, "breakpoint_period", infl.occurrence.breakpoint_period);
        read_number(*it, po, "floor_scale", infl.occurrence.floor_scale);
        read_number(*it, po, "max_reduction", infl.occurrence.max_reduction);
    }
    if (auto it = obj.find("payment"); it != obj.end()) {
        const std::string pp = p + "payment.";
        require_known_keys(*it, pp, {"annual_rate", "size_scale"});
        read_number(*it, pp, "annual_rate", infl.payment.annual_rate);
        read_number(*it, pp, "size_scale", infl.payment.size_scale);
    }
}

void parse_paid_loss(const json& obj, PaidLossConfig& pl) {
    const std::string p = "paid_loss.";
    require_known_keys(obj, p,
                       {"size_log_mean", "size_log_sd", "size_cap", "notification_mean",
                        "settle_log_base", "settle_log_slope", "settle_median_cap",
                        "settle_log_sd", "settle_hard_cap", "payment_count_scale",
                        "payment_count_size_scale", "last_share_min", "last_share_max",
                        "early_pot_min", "early_pot_max", "early_weight_min",
                        "early_weight_max", "epoch_jitter", "min_delay"});
    read_number(obj, p, "size_log_mean", pl.size_log_mean);
    read_number(obj, p, "size_log_sd", pl.size_log_sd);
    read_number(obj, p, "size_cap", pl.size_cap);
    read_number(obj, p, "notification_mean", pl.notification_mean);
    read_number(obj, p, "settle_log_base", pl.settle_log_base);
    read_number(obj, p, "settle_log_slope", pl.settle_log_slope);
    read_number(obj, p, "settle_median_cap", pl.settle_median_cap);
    read_number(obj, p, "settle_log_sd", pl.settle_log_sd);
    read_number(obj, p, "settle_hard_cap", pl.settle_hard_cap);
    read_number(obj, p, "payment_count_scale", pl.payment_count_scale);
    read_number(obj, p, "payment_count_size_scale", pl.payment_count_size_scale);
    read_number(obj, p, "last_share_min", pl.last_share_min);
    read_number(obj, p, "last_share_max", pl.last_share_max);
    read_number(obj, p, "early_pot_min", pl.early_pot_min);
    read_number(obj, p, "early_pot_max", pl.early_pot_max);
    read_number(obj, p, "early_weight_min", pl.early_weight_min);
    read_number(obj, p, "early_weight_max", pl.early_weight_max);
    read_number(obj, p, "epoch_jitter", pl.epoch_jitter);
    read_number(obj, p, "min_delay", pl.min_delay);
}

void parse_major(const json& obj, MajorRevisionConfig& mj) {
    const std::string p = "major.";
    require_known_keys(obj, p,
                       {"size_threshold", "size_span", "p2_base", "p2_slope", "p3_slope",
                        "min_payments", "coincidence_base", "coincidence_threshold",
                        "coincidence_span", "factor2_log_mean", "factor_log_sd",
                        "factor3_base", "factor3_slope", "factor3_anchor"});
    read_number(obj, p, "size_threshold", mj.size_threshold);
    read_number(obj, p, "size_span", mj.size_span);
    read_number(obj, p, "p2_base", mj.p2_base);
    read_number(obj, p, "p2_slope", mj.p2_slope);
    read_number(obj, p, "p3_slope", mj.p3_slope);
    read_int(obj, p, "min_payments", mj.min_payments);
    read_number(obj, p, "coincidence_base", mj.coincidence_base);
    read_number(obj, p, "coincidence_threshold", mj.coincidence_threshold);
    read_number(obj, p, "coincidence_span", mj.coincidence_span);
    read_number(obj, p, "factor2_log_mean", mj.factor2_log_mean);
    read_number(obj, p, "factor_log_sd", mj.factor_log_sd);
    read_number(obj, p, "factor3_base", mj.factor3_base);
    read_number(obj, p, "factor3_slope", mj.factor3_slope);
    read_number(obj, p, "factor3_anchor", mj.factor3_anchor);
}

void parse_minor(const json& obj, MinorRevisionConfig& mn) {
    const std::string p = "minor.";
    require_known_keys(obj, p,
                       {"at_payment_prob", "free_mean_cap", "free_mean_divisor",
                        "epoch_min_divisor", "mu_early", "mu_mid", "mu_late",
                        "sd_after_major", "sd_default"});
    read_number(obj, p, "at_payment_prob", mn.at_payment_prob);
    read_number(obj, p, "free_mean_cap", mn.free_mean_cap);
    read_number(obj, p, "free_mean_divisor", mn.free_mean_divisor);
    read_number(obj, p, "epoch_min_divisor", mn.epoch_min_divisor);
    read_number(obj, p, "mu_early", mn.mu_early);
    read_number(obj, p, "mu_mid", mn.mu_mid);
    read_number(obj, p, "mu_late", mn.mu_late);
    read_number(obj, p, "sd_after_major", mn.sd_after_major);
    read_number(obj, p, "sd_default", mn.sd_default);
}

void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string("config field '") + field + "' must be positive and finite");
    }
}

void require_range(double v, double lo, double hi, const char* field) {
    if (!(v >= lo && v <= hi)) {
        std::ostringstream os;
        os << "config field '" << field << "' must lie in [" << lo << ", " << hi << "]";
        throw ConfigError(os.str());
    }
}

} // namespace

double SimulationConfig::exposure_at(int period) const {
    if (exposure.size() == 1) {
        return exposure.front();
    }
    return exposure.at(static_cast<std::size_t>(period - 1));
}

double SimulationConfig::frequency_at(int period) const {
    if (frequency.size() == 1) {
        return frequency.front();
    }
    return frequency.at(static_cast<std::size_t>(period - 1));
}

SimulationConfig default_config() {
    return SimulationConfig{};
}

SimulationConfig config_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config document must be a JSON object");
    }

    SimulationConfig cfg = default_config();
    require_known_keys(doc, "",
                       {"time_unit_years", "n_periods", "reference_size", "kappa", "exposure",
                        "frequency", "master_seed", "preset", "paid_loss", "major", "minor",
                        "inflation"});
    read_number(doc, "", "time_unit_years", cfg.time_unit_years);
    read_int(doc, "", "n_periods", cfg.n_periods);
    read_number(doc, "", "reference_size", cfg.reference_size);
    read_number(doc, "", "kappa", cfg.kappa);
    read_profile(doc, "", "exposure", cfg.exposure);
    read_profile(doc, "", "frequency", cfg.frequency);
    if (auto it = doc.find("master_seed"); it != doc.end()) {
        if (!it->is_number_unsigned() && !it->is_number_integer()) {
            throw ConfigError("config field 'master_seed' must be a non-negative integer");
        }
        if (it->is_number_integer() && !it->is_number_unsigned() && it->get<long long>() < 0) {
            throw ConfigError("config field 'master_seed' must be a non-negative integer");
        }
        cfg.master_seed = it->get<std::uint64_t>();
    }
    if (auto it = doc.find("preset"); it != doc.end()) {
        if (!it->is_string()) {
            throw ConfigError("config field 'preset' must be a string");
        }
        cfg.preset = it->get<std::string>();
    }
    if (auto it = doc.find("paid_loss"); it != doc.end()) {
        parse_paid_loss(*it, cfg.paid_loss);
    }
    if (auto it = doc.find("major"); it != doc.end()) {
        parse_major(*it, cfg.major);
    }
    if (auto it = doc.find("minor"); it != doc.end()) {
        parse_minor(*it, cfg.minor);
    }
    if (auto it = doc.find("inflation"); it != doc.end()) {
        parse_inflation(*it, cfg.inflation);
    }

    validate(cfg);
    return cfg;
}

SimulationConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed while reading config file '" + path + "'");
    }
    return config_from_json_text(buf.str());
}

std::string config_to_json_text(const SimulationConfig& cfg) {
    json doc;
    doc["time_unit_years"] = cfg.time_unit_years;
    doc["n_periods"] = cfg.n_periods;
    doc["reference_size"] = cfg.reference_size;
    doc["kappa"] = cfg.kappa;
    doc["exposure"] = cfg.exposure;
    doc["frequency"] = cfg.frequency;
    doc["master_seed"] = cfg.master_seed;
    doc["preset"] = cfg.preset;

    json& pl = doc["paid_loss"];
    pl["size_log_mean"] = cfg.paid_loss.size_log_mean;
    pl["size_log_sd"] = cfg.paid_loss.size_log_sd;
    pl["size_cap"] = cfg.paid_loss.size_cap;
    pl["notification_mean"] = cfg.paid_loss.notification_mean;
    pl["settle_log_base"] = cfg.paid_loss.settle_log_base;
    pl["settle_log_slope"] = cfg.paid_loss.settle_log_slope;
    pl["settle_median_cap"] = cfg.paid_loss.settle_median_cap;
    pl["settle_log_sd"] = cfg.paid_loss.settle_log_sd;
    pl["settle_hard_cap"] = cfg.paid_loss.settle_hard_cap;
    pl["payment_count_scale"] = cfg.paid_loss.payment_count_scale;
    pl["payment_count_size_scale"] = cfg.paid_loss.payment_count_size_scale;
    pl["last_share_min"] = cfg.paid_loss.last_share_min;
    pl["last_share_max"] = cfg.paid_loss.last_share_max;
    pl["early_pot_min"] = cfg.paid_loss.early_pot_min;
    pl["early_pot_max"] = cfg.paid_loss.early_pot_max;
    pl["early_weight_min"] = cfg.paid_loss.early_weight_min;
    pl["early_weight_max"] = cfg.paid_loss.early_weight_max;
    pl["epoch_jitter"] = cfg.paid_loss.epoch_jitter;
    pl["min_delay"] = cfg.paid_loss.min_delay;

    json& mj = doc["major"];
    mj["size_threshold"] = cfg.major.size_threshold;
    mj["size_span"] = cfg.major.size_span;
    mj["p2_base"] = cfg.major.p2_base;
    mj["p2_slope"] = cfg.major.p2_slope;
    mj["p3_slope"] = cfg.major.p3_slope;
    mj["min_payments"] = cfg.major.min_payments;
    mj["coincidence_base"] = cfg.major.coincidence_base;
    mj["coincidence_threshold"] = cfg.major.coincidence_threshold;
    mj["coincidence_span"] = cfg.major.coincidence_span;
    mj["factor2_log_mean"] = cfg.major.factor2_log_mean;
    mj["factor_log_sd"] = cfg.major.factor_log_sd;
    mj["factor3_base"] = cfg.major.factor3_base;
    mj["factor3_slope"] = cfg.major.factor3_slope;
    mj["factor3_anchor"] = cfg.major.factor3_anchor;

    json& mn = doc["minor"];
    mn["at_payment_prob"] = cfg.minor.at_payment_prob;
    mn["free_mean_cap"] = cfg.minor.free_mean_cap;
    mn["free_mean_divisor"] = cfg.minor.free_mean_divisor;
    mn["epoch_min_divisor"] = cfg.minor.epoch_min_divisor;
    mn["mu_early"] = cfg.minor.mu_early;
    mn["mu_mid"] = cfg.minor.mu_mid;
    mn["mu_late"] = cfg.minor.mu_late;
    mn["sd_after_major"] = cfg.minor.sd_after_major;
    mn["sd_default"] = cfg.minor.sd_default;

    json& infl = doc["inflation"];
    infl["base_annual_rate"] = cfg.inflation.base_annual_rate;
    infl["quarterly_rates"] = cfg.inflation.quarterly_rates;
    json& occ = infl["occurrence"];
    occ["enabled"] = cfg.inflation.occurrence.enabled;
    occ["breakpoint_period"] = cfg.inflation.occurrence.breakpoint_period;
    occ["floor_scale"] = cfg.inflation.occurrence.floor_scale;
    occ["max_reduction"] = cfg.inflation.occurrence.max_reduction;
    json& pay = infl["payment"];
    pay["annual_rate"] = cfg.inflation.payment.annual_rate;
    pay["size_scale"] = cfg.inflation.payment.size_scale;

    return doc.dump(2);
}

void validate(const SimulationConfig& cfg) {
    require_positive(cfg.time_unit_years, "time_unit_years");
    if (cfg.n_periods < 1) {
        throw ConfigError("config field 'n_periods' must be at least 1");
    }
    require_positive(cfg.reference_size, "reference_size");
    if (!(cfg.kappa > 0.0 && cfg.kappa < 1.0)) {
        throw ConfigError("config field 'kappa' must lie strictly between 0 and 1");
    }

    auto check_profile = [&](const std::vector<double>& v, const char* field) {
        if (v.size() != 1 && v.size() != static_cast<std::size_t>(cfg.n_periods)) {
            std::ostringstream os;
            os << "config field '" << field << "' must be a scalar or have length n_periods ("
               << cfg.n_periods << "), got length " << v.size();
            throw ConfigError(os.str());
        }
        for (double x : v) {
            if (!(x >= 0.0) || !std::isfinite(x)) {
                throw ConfigError(std::string("config field '") + field +
                                  "' entries must be non-negative and finite");
            }
        }
    };
    check_profile(cfg.exposure, "exposure");
    check_profile(cfg.frequency, "frequency");

    if (cfg.preset != "default_heterogeneous" && cfg.preset != "homogeneous") {
        throw ConfigError("config field 'preset' must be 'default_heterogeneous' or 'homogeneous', got '" +
                          cfg.preset + "'");
    }

    const PaidLossConfig& pl = cfg.paid_loss;
    require_positive(pl.size_log_sd, "paid_loss.size_log_sd");
    require_positive(pl.size_cap, "paid_loss.size_cap");
    require_positive(pl.notification_mean, "paid_loss.notification_mean");
    require_positive(pl.settle_log_sd, "paid_loss.settle_log_sd");
    require_positive(pl.settle_median_cap, "paid_loss.settle_median_cap");
    require_positive(pl.settle_hard_cap, "paid_loss.settle_hard_cap");
    require_positive(pl.payment_count_size_scale, "paid_loss.payment_count_size_scale");
    require_positive(pl.min_delay, "paid_loss.min_delay");
    require_range(pl.last_share_min, 0.0, 1.0, "paid_loss.last_share_min");
    require_range(pl.last_share_max, pl.last_share_min, 1.0, "paid_loss.last_share_max");
    require_range(pl.early_pot_min, 0.0, 1.0, "paid_loss.early_pot_min");
    require_range(pl.early_pot_max, pl.early_pot_min, 1.0, "paid_loss.early_pot_max");
    if (!(pl.last_share_max + pl.early_pot_max < 1.0)) {
        throw ConfigError("config fields 'paid_loss.last_share_max' + 'paid_loss.early_pot_max' "
                          "must sum to less than 1");
    }
    require_positive(pl.early_weight_min, "paid_loss.early_weight_min");
    if (!(pl.early_weight_max >= pl.early_weight_min)) {
        throw ConfigError("config field 'paid_loss.early_weight_max' must be >= 'paid_loss.early_weight_min'");
    }
    require_range(pl.epoch_jitter, 0.0, 0.99, "paid_loss.epoch_jitter");
    // Adequacy of the final payment is what guarantees the kappa constraint
    // can always be met just before settlement.
    if (pl.last_share_min < (1.0 - cfg.kappa) - 1e-12) {
        std::ostringstream os;
        os << "config field 'paid_loss.last_share_min' (" << pl.last_share_min
           << ") must be at least 1 - kappa (" << 1.0 - cfg.kappa
           << ") so estimates can stay adequate up to settlement";
        throw ConfigError(os.str());
    }

    const MajorRevisionConfig& mj = cfg.major;
    require_positive(mj.size_span, "major.size_span");
    require_positive(mj.coincidence_span, "major.coincidence_span");
    require_range(mj.p2_base, 0.0, 1.0, "major.p2_base");
    require_range(mj.p2_slope, 0.0, 1.0, "major.p2_slope");
    require_range(mj.p3_slope, 0.0, 1.0, "major.p3_slope");
    if (mj.p2_base + mj.p2_slope + mj.p3_slope > 1.0) {
        throw ConfigError("config fields 'major.p2_base' + 'major.p2_slope' + 'major.p3_slope' "
                          "must sum to at most 1");
    }
    if (mj.min_payments < 1) {
        throw ConfigError("config field 'major.min_payments' must be at least 1");
    }
    require_range(mj.coincidence_base, 0.0, 1.0, "major.coincidence_base");
    require_positive(mj.factor_log_sd, "major.factor_log_sd");

    const MinorRevisionConfig& mn = cfg.minor;
    require_range(mn.at_payment_prob, 0.0, 1.0, "minor.at_payment_prob");
    require_positive(mn.free_mean_divisor, "minor.free_mean_divisor");
    if (!(mn.free_mean_cap >= 0.0)) {
        throw ConfigError("config field 'minor.free_mean_cap' must be non-negative");
    }
    if (!(mn.epoch_min_divisor > 1.0)) {
        throw ConfigError("config field 'minor.epoch_min_divisor' must exceed 1");
    }
    require_positive(mn.sd_after_major, "minor.sd_after_major");
    require_positive(mn.sd_default, "minor.sd_default");

    const InflationConfig& infl = cfg.inflation;
    if (!(infl.base_annual_rate > -1.0)) {
        throw ConfigError("config field 'inflation.base_annual_rate' must exceed -1");
    }
    for (double r : infl.quarterly_rates) {
        if (!(r > -1.0) || !std::isfinite(r)) {
            throw ConfigError("config field 'inflation.quarterly_rates' entries must be finite and exceed -1");
        }
    }
    if (!(infl.payment.annual_rate > -1.0)) {
        throw ConfigError("config field 'inflation.payment.annual_rate' must exceed -1");
    }
    require_positive(infl.payment.size_scale, "inflation.payment.size_scale");
    require_positive(infl.occurrence.floor_scale, "inflation.occurrence.floor_scale");
    require_range(infl.occurrence.max_reduction, 0.0, 1.0, "inflation.occurrence.max_reduction");
    if (infl.occurrence.breakpoint_period < 0) {
        throw ConfigError("config field 'inflation.occurrence.breakpoint_period' must be non-negative");
    }
}

void apply_preset(SimulationConfig& cfg) {
    if (cfg.preset == "default_heterogeneous") {
        return;
    }
    if (cfg.preset == "homogeneous") {
        cfg.exposure.assign(1, cfg.exposure_at(1));
        cfg.frequency.assign(1, cfg.frequency_at(1));
        cfg.inflation.occurrence.enabled = false;
        cfg.inflation.payment.annual_rate = 0.0;
        return;
    }
    throw ConfigError("unknown preset '" + cfg.preset + "'");
}

std::string config_hash(const SimulationConfig& cfg) {
    const std::uint64_t h = fnv1a64(config_to_json_text(cfg));
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace claimsim
