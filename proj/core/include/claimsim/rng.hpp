#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace claimsim {

/// FNV-1a 64-bit hash of a byte string. Used to derive independent random
/// streams from human-readable scope labels.
std::uint64_t fnv1a64(std::string_view bytes);

/// One step of the splitmix64 generator; advances `state` and returns the
/// next output. Used for stream-state expansion from a single seed word.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Inverse standard-normal CDF (Acklam's rational approximation with one
/// Halley refinement step). Monotone in u; |relative error| < 1e-13 after
/// refinement. Requires 0 < u < 1.
double normal_icdf(double u);

/// Inverse CDF of the triangular distribution on [lo, hi] with the given
/// mode. Handles mode == lo and mode == hi. Requires lo <= mode <= hi,
/// lo < hi, and u in [0, 1].
double triangular_icdf(double u, double lo, double mode, double hi);

/// A counter-free xoshiro256++ stream seeded from (master_seed, scope label).
///
/// Every logically distinct sampling purpose gets its own stream, keyed by a
/// label such as "claim/7/12/size". Streams with distinct labels are
/// statistically independent, and a stream's output depends only on
/// (master_seed, label) -- never on how many draws other streams have made.
/// This is what makes multi-threaded simulation bit-identical to the
/// single-threaded run.
///
/// All continuous variates are produced by inverse-CDF transforms of a single
/// uniform draw, so the number of raw 64-bit outputs consumed per variate is
/// fixed (one), which keeps replay and cross-thread determinism trivial.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::string_view scope);

    /// Next raw 64-bit output.
    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform on [a, b).
    double uniform(double a, double b);

    /// Normal with the given mean and standard deviation (inverse CDF).
    double normal(double mean, double sd);

    /// exp(Normal(log_mean, log_sd)).
    double lognormal(double log_mean, double log_sd);

    /// Exponential with the given mean (inverse CDF).
    double exponential(double mean);

    /// Triangular on [lo, hi] with the given mode (inverse CDF).
    double triangular(double lo, double mode, double hi);

    /// Bernoulli(p); consumes exactly one 64-bit output.
    bool bernoulli(double p);

    /// Geometric on {0, 1, 2, ...} with the given mean (= (1-p)/p).
    /// Consumes exactly one 64-bit output.
    long geometric_mean(double mean);

    /// Poisson with the given mean, by sequential-search inversion (one
    /// uniform per draw). Means above 60 are drawn as sums over chunks of
    /// mean <= 60 so the partial-sum recursion stays numerically healthy;
    /// the number of raw outputs consumed depends only on the mean.
    long poisson(double mean);

private:
    std::array<std::uint64_t, 4> state_;
};

} // namespace claimsim
