#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hsum {

/// Exact rational scalar. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q" with arbitrary-size integers.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline Rational pow_si(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational out;
    if (e > 0) {
        mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    } else {
        if (base == 0) throw std::domain_error("pow_si: zero to negative power");
        mpz_pow_ui(out.get_num_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(-e));
        mpz_pow_ui(out.get_den_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(-e));
    }
    out.canonicalize();
    return out;
}

}  // namespace hsum
