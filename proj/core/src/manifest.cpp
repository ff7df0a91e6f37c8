#include "claimsim/manifest.hpp"

#include "claimsim/rng.hpp"

#include <cstdio>

#include <json.hpp>

namespace claimsim {

std::string content_hash(const std::string& bytes) {
    const std::uint64_t h = fnv1a64(bytes);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string manifest_to_json_text(const RunManifest& manifest) {
    nlohmann::ordered_json doc;
    doc["version"] = manifest.version;
    doc["config_hash"] = manifest.config_hash;
    doc["master_seed"] = manifest.master_seed;
    doc["inflation"] = manifest.inflation;
    doc["n_claims"] = manifest.n_claims;
    doc["n_transactions"] = manifest.n_transactions;
    doc["data_hash"] = manifest.data_hash;
    doc["outputs"] = nlohmann::ordered_json::array();
    for (const auto& out : manifest.outputs) {
        nlohmann::ordered_json entry;
        entry["name"] = out.name;
        entry["rows"] = out.rows;
        doc["outputs"].push_back(entry);
    }
    return doc.dump(2) + "\n";
}

} // namespace claimsim
