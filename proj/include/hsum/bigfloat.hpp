#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "hsum/rational.hpp"

namespace hsum {

inline mpfr_prec_t digits_to_bits(long digits10) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits10) * 3.3219280948873623)) + 16;
}

/// Arbitrary-precision real scalar (RAII over mpfr_t). Every value carries its
/// working precision; binary operations produce results at the wider one.
class Real {
public:
    Real() { mpfr_init2(v_, 64); mpfr_set_nan(v_); }
    explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_nan(v_); }

    Real(const Real& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long x, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(double x, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(const Rational& q, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Base-2 exponent; magnitude of the value is in [2^(e-1), 2^e).
    long exp2() const { return is_zero() || is_nan() ? -1000000000L : mpfr_get_exp(v_); }

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }

    friend Real operator+(const Real& a, long b) { return bin_si(mpfr_add_si, a, b); }
    friend Real operator-(const Real& a, long b) { return bin_si(mpfr_sub_si, a, b); }
    friend Real operator*(const Real& a, long b) { return bin_si(mpfr_mul_si, a, b); }
    friend Real operator/(const Real& a, long b) { return bin_si(mpfr_div_si, a, b); }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long s) { mpfr_mul_si(v_, v_, s, MPFR_RNDN); return *this; }
    Real& operator/=(long s) { mpfr_div_si(v_, v_, s, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }
    friend bool operator<(const Real& a, int b) { return a < static_cast<long>(b); }
    friend bool operator>(const Real& a, int b) { return a > static_cast<long>(b); }
    friend bool operator<=(const Real& a, int b) { return a <= static_cast<long>(b); }
    friend bool operator>=(const Real& a, int b) { return a >= static_cast<long>(b); }
    friend bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }
    friend Real operator*(const Real& a, double b) {
        Real r(a.prec());
        mpfr_mul_d(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    /// Scientific-notation string with the given number of significant digits.
    std::string str(long digits10) const {
        if (is_nan()) return "nan";
        if (is_zero()) return "0";
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits10), v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        std::string sign;
        if (mant[0] == '-') {
            sign = "-";
            mant = mant.substr(1);
        }
        std::string out = sign + mant.substr(0, 1) + "." + mant.substr(1) + "e" +
                          std::to_string(static_cast<long>(e) - 1);
        return out;
    }

private:
    template <typename F>
    static Real bin(F f, const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    template <typename F>
    static Real bin_si(F f, const Real& a, long b) {
        Real r(a.prec());
        f(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

inline Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real log1p(const Real& a) {
    Real r(a.prec());
    mpfr_log1p(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real expm1(const Real& a) {
    Real r(a.prec());
    mpfr_expm1(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sin(const Real& a) {
    Real r(a.prec());
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real cos(const Real& a) {
    Real r(a.prec());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sinh(const Real& a) {
    Real r(a.prec());
    mpfr_sinh(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real cosh(const Real& a) {
    Real r(a.prec());
    mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
/// a^b for a > 0.
inline Real pow(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real mul_2si(const Real& a, long k) {
    Real r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), k, MPFR_RNDN);
    return r;
}
inline Real const_pi(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline Real const_ln2(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}
inline Real const_euler(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}
inline Real zeta_ui(unsigned long k, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_zeta_ui(r.raw(), k, MPFR_RNDN);
    return r;
}

/// Complex scalar over Real; only the operations the continuation engine needs.
struct Complex {
    Real re, im;

    Complex() = default;
    explicit Complex(mpfr_prec_t bits) : re(Real::of(0L, bits)), im(Real::of(0L, bits)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    static Complex real(Real r) {
        Real z = Real::of(0L, r.prec());
        return Complex(std::move(r), std::move(z));
    }

    bool is_real() const { return im.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re + b.re, a.im + b.im);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re - b.re, a.im - b.im);
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator*(const Complex& a, const Real& s) {
        return Complex(a.re * s, a.im * s);
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
    friend Complex operator/(const Complex& a, const Real& s) {
        return Complex(a.re / s, a.im / s);
    }
    friend Complex operator/(const Complex& a, long s) { return Complex(a.re / s, a.im / s); }
    Complex operator-() const { return Complex(-re, -im); }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
};

inline Real abs(const Complex& z) {
    Real r(std::max(z.re.prec(), z.im.prec()));
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}
inline Complex log(const Complex& z) {
    return Complex(log(abs(z)), atan2(z.im, z.re));
}
inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return Complex(m * cos(z.im), m * sin(z.im));
}
/// x^s for real x > 0 and complex s.
inline Complex pow(const Real& x, const Complex& s) {
    Real lx = log(x);
    return exp(Complex(s.re * lx, s.im * lx));
}
inline Complex inv(const Complex& z) {
    Real d = z.re * z.re + z.im * z.im;
    return Complex(z.re / d, -z.im / d);
}

}  // namespace hsum
