#pragma once

#include <stdexcept>
#include <string>

namespace claimsim {

/// Invalid or inconsistent configuration (bad field values, unknown preset, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem / stream failures (unreadable input, unwritable output directory, ...).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that cannot be processed (malformed CSV rows,
/// degenerate triangles with zero column sums, ...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace claimsim
