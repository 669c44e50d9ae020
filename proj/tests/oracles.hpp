#pragma once

// Independent reference implementations used to check the library: naive
// direct sums in long double, deliberately avoiding the library's log-domain
// and vectorized code paths.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

inline long double kl(const std::vector<double>& b, const std::vector<double>& m) {
    long double s = 0.0L;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] > 0.0) {
            s += static_cast<long double>(b[i]) *
                 std::log(static_cast<long double>(b[i]) / m[i]);
        }
    }
    return s;
}

inline long double renyi(const std::vector<double>& b, const std::vector<double>& m,
                         long double alpha) {
    if (alpha == 1.0L) return kl(b, m);
    long double s = 0.0L;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] > 0.0) {
            s += std::pow(static_cast<long double>(b[i]), alpha) *
                 std::pow(static_cast<long double>(m[i]), 1.0L - alpha);
        }
    }
    return std::log(s) / (alpha - 1.0L);
}

inline long double dot(const std::vector<double>& x, const std::vector<double>& y) {
    long double s = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += static_cast<long double>(x[i]) * y[i];
    }
    return s;
}

// E_p[ln(F/Price)] with the price quoted against m.
inline long double log_rate(const std::vector<double>& payoff,
                            const std::vector<double>& m,
                            const std::vector<double>& p) {
    const long double quote = dot(payoff, m);
    long double s = 0.0L;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            s += static_cast<long double>(p[i]) *
                 std::log(static_cast<long double>(payoff[i]) / quote);
        }
    }
    return s;
}

// f^(1/R)/Price[f^(1/R)] for strictly positive inputs.
inline std::vector<double> optimal_payoff(const std::vector<double>& b,
                                          const std::vector<double>& m, double r) {
    std::vector<double> t(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        t[i] = static_cast<double>(
            std::pow(static_cast<long double>(b[i]) / m[i], 1.0L / r));
    }
    const long double quote = dot(t, m);
    for (double& v : t) v = static_cast<double>(v / quote);
    return t;
}

}  // namespace oracle
