#pragma once

#include <stdexcept>

#include "hsum/bigfloat.hpp"
#include "hsum/constants_core.hpp"

namespace hsum {

namespace detail {

/// Direct series sum x^n / n^k; geometric for |x| <= 1/2.
inline Real polylog_series(int k, const Real& x) {
    mpfr_prec_t bits = x.prec();
    Real sum = Real::of(0L, bits);
    Real xn = Real::of(1L, bits);
    long cutoff = -(static_cast<long>(bits) + 8);
    for (long n = 1; n < 100000; ++n) {
        xn *= x;
        Real term = xn / pow_si(Real::of(n, bits), k);
        sum += term;
        if (term.exp2() < cutoff + sum.exp2() && n > 4) break;
    }
    return sum;
}

/// Expansion of Li_k(e^mu) in powers of mu = ln x, for x in (1/2, 1).
/// The j = k-1 term carries the (H_{k-1} - ln(-mu)) factor; negative zeta
/// arguments come from Bernoulli numbers.
inline Real polylog_log_expansion(int k, const Real& mu) {
    mpfr_prec_t bits = mu.prec();
    Real sum = Real::of(0L, bits);
    Real muj = Real::of(1L, bits);        // mu^j / j!
    long cutoff = -(static_cast<long>(bits) + 8);
    long scale_exp = 4;                    // crude magnitude for the stop test
    for (int j = 0; j <= 1000; ++j) {
        if (j > 0) muj = muj * mu / j;
        if (j == k - 1) {
            Real factor = Real::of(harmonic_number(k - 1), bits) - log(-mu);
            sum += muj * factor;
            continue;
        }
        int arg = k - j;
        Real term(bits);
        if (arg >= 2) {
            term = zeta_ui(static_cast<unsigned long>(arg), bits) * muj;
        } else {
            Rational z = zeta_neg(-arg);
            if (z == 0) continue;
            term = Real::of(z, bits) * muj;
        }
        sum += term;
        if (j > k + 2 && term.exp2() < cutoff + scale_exp) break;
    }
    return sum;
}

}  // namespace detail

/// Li_k(x) for x in [0, 1], with u = 1 - x supplied separately so that
/// arguments exponentially close to 1 keep full accuracy.
inline Real polylog_xu(int k, const Real& x, const Real& u) {
    if (k < 1) throw std::invalid_argument("polylog: k >= 1 required");
    mpfr_prec_t bits = std::max(x.prec(), u.prec());
    if (x.is_zero()) return Real::of(0L, bits);
    if (u.is_zero()) {
        if (k == 1) throw std::domain_error("polylog: Li_1(1) diverges");
        return zeta_ui(static_cast<unsigned long>(k), bits);
    }
    if (x <= 0.5) return detail::polylog_series(k, x);
    if (k == 1) return -log(u);  // Li_1(x) = -ln(1-x)
    Real mu = log1p(-u);  // ln x without cancellation
    return detail::polylog_log_expansion(k, mu);
}

/// Li_k(-x) for x in [0, 1] (argument on the negative axis), u = 1 - x.
inline Real polylog_neg_xu(int k, const Real& x, const Real& u) {
    mpfr_prec_t bits = std::max(x.prec(), u.prec());
    if (x.is_zero()) return Real::of(0L, bits);
    if (x <= 0.5) return detail::polylog_series(k, -x);
    // Li_k(x) + Li_k(-x) = 2^{1-k} Li_k(x^2); both arguments stay near 1.
    Real x2 = x * x;
    Real u2 = u * (2 - u);  // 1 - x^2
    return mul_2si(polylog_xu(k, x2, u2), 1 - k) - polylog_xu(k, x, u);
}

/// Li_k(x) on [-1, 1]; the spec-facing entry point.
inline Real polylog(int k, const Real& x) {
    Real ax = abs(x);
    if (ax > 1) throw std::domain_error("polylog: |x| <= 1 required");
    Real u = 1 - ax;
    if (x.sign() >= 0) return polylog_xu(k, ax, u);
    return polylog_neg_xu(k, ax, u);
}

}  // namespace hsum
