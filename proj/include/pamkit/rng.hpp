#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "pamkit/mathutil.hpp"

namespace pamkit {

// splitmix64 step; used to derive independent stream seeds from (seed, indices).
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return mix_seed(mix_seed(mix_seed(seed) ^ a) ^ b);
}

/// Seeded random stream. The engine is std::mt19937_64 (bit-exact by the
/// standard) and all variate transforms are implemented here, so sequences
/// are reproducible across platforms and standard libraries.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    /// Uniform on the open interval (0,1).
    double uniform() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via inverse-CDF transform.
    double normal() { return normal_quantile(uniform()); }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    double lognormal(double mean_log, double sd_log) {
        return std::exp(normal(mean_log, sd_log));
    }

    // Marsaglia-Tsang squeeze method; shape < 1 boosted via Gamma(a+1) U^{1/a}.
    double gamma(double shape) {
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    void dirichlet(std::span<const double> alpha, std::span<double> out) {
        double sum = 0.0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            out[i] = gamma(alpha[i]);
            sum += out[i];
        }
        for (std::size_t i = 0; i < alpha.size(); ++i) out[i] /= sum;
    }

    /// Inverse-Gaussian(mu, lambda) by the Michael-Schucany-Haas transform.
    double inverse_gaussian(double mu, double lambda) {
        const double z = normal();
        const double y = z * z;
        const double x = mu + mu * mu * y / (2.0 * lambda) -
                         mu / (2.0 * lambda) *
                             std::sqrt(4.0 * mu * lambda * y + mu * mu * y * y);
        if (uniform() <= mu / (mu + x)) return x;
        return mu * mu / x;
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // rejection from the top to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace pamkit
