#include "claimsim/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace claimsim {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

inline std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

// Acklam's rational approximation coefficients for the inverse normal CDF.
constexpr double kA[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                          -2.759285104469687e+02, 1.383577518672690e+02,
                          -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                          -1.556989798598866e+02, 6.680131188771972e+01,
                          -1.328068155288572e+01};
constexpr double kC[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                          -2.400758277161838e+00, -2.549732539343734e+00,
                          4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                          2.445134137142996e+00, 3.754408661907416e+00};

} // namespace

double normal_icdf(double u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::domain_error("normal_icdf: u must lie strictly in (0,1)");
    }
    constexpr double p_low = 0.02425;
    constexpr double p_high = 1.0 - p_low;
    double x;
    if (u < p_low) {
        double q = std::sqrt(-2.0 * std::log(u));
        x = (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
            ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
    } else if (u <= p_high) {
        double q = u - 0.5;
        double r = q * q;
        x = (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * q /
            (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - u));
        x = -(((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
            ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
    }
    // One Halley refinement step against the exact CDF (via erfc).
    constexpr double inv_sqrt2 = 0.7071067811865475244;
    constexpr double sqrt_2pi = 2.5066282746310005024;
    double e = 0.5 * std::erfc(-x * inv_sqrt2) - u;
    double g = e * sqrt_2pi * std::exp(0.5 * x * x); // e / pdf(x)
    x -= g / (1.0 + 0.5 * x * g);
    return x;
}

double triangular_icdf(double u, double lo, double mode, double hi) {
    if (!(lo <= mode && mode <= hi && lo < hi)) {
        throw std::domain_error("triangular_icdf: require lo <= mode <= hi, lo < hi");
    }
    if (!(u >= 0.0 && u <= 1.0)) {
        throw std::domain_error("triangular_icdf: u must lie in [0,1]");
    }
    const double span = hi - lo;
    const double f_mode = (mode - lo) / span;
    if (u < f_mode) {
        return lo + std::sqrt(u * span * (mode - lo));
    }
    return hi - std::sqrt((1.0 - u) * span * (hi - mode));
}

RngStream::RngStream(std::uint64_t master_seed, std::string_view scope) {
    std::uint64_t s = master_seed ^ fnv1a64(scope);
    for (auto& word : state_) {
        word = splitmix64_next(s);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
        state_[0] = 0x9e3779b97f4a7c15ULL; // never leave the all-zero state
    }
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl64(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl64(state_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
    return a + (b - a) * uniform01();
}

double RngStream::normal(double mean, double sd) {
    // uniform01() can return exactly 0; shift into (0,1) without bias at
    // double precision by mapping u -> (k + 0.5) * 2^-53 style midpoint.
    double u = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    return mean + sd * normal_icdf(u);
}

double RngStream::lognormal(double log_mean, double log_sd) {
    return std::exp(normal(log_mean, log_sd));
}

double RngStream::exponential(double mean) {
    double u = uniform01();
    return -mean * std::log1p(-u);
}

double RngStream::triangular(double lo, double mode, double hi) {
    return triangular_icdf(uniform01(), lo, mode, hi);
}

bool RngStream::bernoulli(double p) {
    return uniform01() < p;
}

long RngStream::geometric_mean(double mean) {
    double u = uniform01(); // always consume, for stable draw counts
    if (mean <= 0.0) {
        return 0;
    }
    const double p = 1.0 / (1.0 + mean);
    if (u <= 0.0) {
        return 0;
    }
    return static_cast<long>(std::floor(std::log1p(-u) / std::log1p(-p)));
}

long RngStream::poisson(double mean) {
    if (!(mean >= 0.0)) {
        throw std::domain_error("poisson: mean must be non-negative");
    }
    long total = 0;
    double remaining = mean;
    constexpr double kChunk = 60.0;
    while (remaining > 0.0) {
        const double mu = remaining > kChunk ? kChunk : remaining;
        remaining -= mu;
        const double u = uniform01();
        double p = std::exp(-mu);
        double cdf = p;
        long k = 0;
        while (u > cdf) {
            ++k;
            p *= mu / static_cast<double>(k);
            cdf += p;
            if (k > 100000000L) {
                break; // unreachable for sane means; guards FP pathologies
            }
        }
        total += k;
    }
    return total;
}

} // namespace claimsim
