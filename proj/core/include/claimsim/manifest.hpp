#pragma once

#include "claimsim/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace claimsim {

/// Reproducibility sidecar written next to every simulation output set.
/// Contains no timestamps or host details: identical (config, seed, version,
/// mode) produce byte-identical manifests regardless of thread count.
struct RunManifest {
    std::string version;
    std::string config_hash;
    std::uint64_t master_seed = 0;
    bool inflation = true;
    long n_claims = 0;
    long n_transactions = 0;
    /// FNV-1a hash over the emitted CSV bytes, hex-encoded.
    std::string data_hash;
    struct Output {
        std::string name;
        long rows = 0;
    };
    std::vector<Output> outputs;
};

/// Deterministic JSON text (sorted keys, 2-space indent, trailing newline).
std::string manifest_to_json_text(const RunManifest& manifest);

/// Hex-encoded FNV-1a 64-bit hash of a byte string.
std::string content_hash(const std::string& bytes);

} // namespace claimsim
