#pragma once

#include <mutex>
#include <vector>

#include "hsum/bigfloat.hpp"
#include "hsum/rational.hpp"

namespace hsum {

/// Bernoulli numbers B_0, B_1, ... (B_1 = -1/2), cached process-wide.
inline const Rational& bernoulli(int n) {
    static std::vector<Rational> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    if (cache.empty()) cache = {Rational(1), Rational(-1, 2)};
    while (static_cast<int>(cache.size()) <= n) {
        // sum_{j<m} C(m+1,j) B_j = 0 for m >= 1
        int mth = static_cast<int>(cache.size());
        Rational acc(0);
        Rational binom(1);  // C(m+1, j), updated incrementally
        for (int j = 0; j < mth; ++j) {
            acc += binom * cache[static_cast<std::size_t>(j)];
            binom *= (mth + 1 - j);
            binom /= (j + 1);
        }
        cache.push_back(-acc / binom);
    }
    return cache[static_cast<std::size_t>(n)];
}

/// zeta(-m) for m >= 0 as an exact rational.
inline Rational zeta_neg(int m) {
    if (m == 0) return Rational(-1, 2);
    if (m % 2 == 0) return Rational(0);
    return -bernoulli(m + 1) / (m + 1);
}

/// Harmonic number H_n as an exact rational.
inline Rational harmonic_number(int n) {
    Rational h(0);
    for (int k = 1; k <= n; ++k) h += Rational(1, k);
    return h;
}

}  // namespace hsum
