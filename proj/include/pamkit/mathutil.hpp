#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace pamkit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLogTwoPi = 1.8378770664093454836;
inline constexpr double kSqrtTwoPi = 2.5066282746310005024;

// Log-densities are floored here so that objective functions stay finite
// when single trials fall into vanishing-probability regions.
inline constexpr double kLogDensityFloor = -700.0;

/// Logistic sigmoid 1/(1+exp(-x)); saturates smoothly at extreme x.
inline double sigmoid(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

inline double logit(double p) { return std::log(p / (1.0 - p)); }

// log(1 - exp(x)) for x < 0, switching forms at -ln2 to avoid cancellation.
inline double log1mexp(double x) {
    if (x >= 0.0) return -std::numeric_limits<double>::infinity();
    if (x > -0.6931471805599453) return std::log(-std::expm1(x));
    return std::log1p(-std::exp(x));
}

inline double logsumexp2(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double m = a > b ? a : b;
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

/// log of the standard normal CDF, accurate over the whole real line.
/// Uses erfc up to its underflow limit and the asymptotic tail expansion
/// log Phi(x) ~ -x^2/2 - log(-x sqrt(2 pi)) beyond it.
inline double log_normal_cdf(double x) {
    if (x > 5.0) {
        // Phi(x) close to 1; log1p of the tiny upper tail
        return std::log1p(-0.5 * std::erfc(x / std::numbers::sqrt2));
    }
    if (x > -37.0) {
        return std::log(0.5 * std::erfc(-x / std::numbers::sqrt2));
    }
    const double x2 = x * x;
    const double corr = std::log1p(-1.0 / x2 + 3.0 / (x2 * x2) - 15.0 / (x2 * x2 * x2));
    return -0.5 * x2 - 0.5 * kLogTwoPi - std::log(-x) + corr;
}

inline double normal_logpdf(double x, double mean, double var) {
    const double d = x - mean;
    return -0.5 * (kLogTwoPi + std::log(var)) - d * d / (2.0 * var);
}

/// Inverse of the standard normal CDF (Wichura's AS 241, ~1e-15 accurate).
double normal_quantile(double p);

}  // namespace pamkit
