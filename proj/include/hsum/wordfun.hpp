#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hsum/bigfloat.hpp"
#include "hsum/constants_core.hpp"
#include "hsum/polylog.hpp"
#include "hsum/rational.hpp"

namespace hsum {

/// Word over the alphabet {0, 1, -1} indexing a harmonic polylogarithm
/// H_w(x) with kernels f_0 = 1/x, f_1 = 1/(1-x), f_{-1} = 1/(1+x) and
/// H_{a,w'}(x) = int_0^x f_a(y) H_{w'}(y) dy.
using HWord = std::vector<int>;

inline HWord hword_nielsen(int p, int n) {
    HWord w(static_cast<std::size_t>(p), 0);
    w.insert(w.end(), static_cast<std::size_t>(n), 1);
    return w;
}
inline HWord hword_polylog(int k) { return hword_nielsen(k - 1, 1); }

/// Plain shuffle product (all interleavings) as word multiplicities.
inline void shuffle_rec(const HWord& a, std::size_t i, const HWord& b, std::size_t j,
                        HWord& prefix, std::map<HWord, long>& out) {
    if (i == a.size() && j == b.size()) {
        ++out[prefix];
        return;
    }
    if (i < a.size()) {
        prefix.push_back(a[i]);
        shuffle_rec(a, i + 1, b, j, prefix, out);
        prefix.pop_back();
    }
    if (j < b.size()) {
        prefix.push_back(b[j]);
        shuffle_rec(a, i, b, j + 1, prefix, out);
        prefix.pop_back();
    }
}

inline std::map<HWord, long> shuffle_words(const HWord& a, const HWord& b) {
    std::map<HWord, long> out;
    HWord prefix;
    shuffle_rec(a, 0, b, 0, prefix, out);
    return out;
}

/// One additive piece of a Mellin kernel: coeff * ln(x)^lnpow * H_word(x),
/// or the special non-Nielsen primitive A3 when the flag is set.
struct KernelTerm {
    Rational coeff;
    int lnpow = 0;
    HWord word;      // empty word means the constant function 1
    bool a3 = false;
};
using KernelExpr = std::vector<KernelTerm>;

/// Multiplies two kernel expressions, shuffle-linearising word products.
inline KernelExpr kernel_mul(const KernelExpr& a, const KernelExpr& b) {
    KernelExpr out;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            if (ta.a3 || tb.a3)
                throw std::invalid_argument("kernel_mul: A3 cannot appear in products");
            for (const auto& [w, mult] : shuffle_words(ta.word, tb.word)) {
                KernelTerm t;
                t.coeff = ta.coeff * tb.coeff * mult;
                t.lnpow = ta.lnpow + tb.lnpow;
                t.word = w;
                out.push_back(std::move(t));
            }
        }
    return out;
}

/// H_w(-x) = (-1)^{#nonzero letters} H_{w with 1 <-> -1}(x); applies the
/// argument negation to every term of a kernel expression.
inline KernelExpr kernel_negate_argument(const KernelExpr& a) {
    KernelExpr out = a;
    for (auto& t : out) {
        if (t.a3 || t.lnpow)
            throw std::invalid_argument("kernel_negate_argument: pure word terms only");
        int flips = 0;
        for (auto& l : t.word) {
            if (l != 0) {
                ++flips;
                l = -l;
            }
        }
        if (flips % 2) t.coeff = -t.coeff;
    }
    return out;
}

/// Evaluation engine for H-words (and A3) on (0,1] at a fixed binary
/// precision.
///
/// Every member carries two representations:
///   - a power series at x = 0 (exact rational coefficients, kept for the
///     asymptotics module; mirrored into floats for evaluation), and
///   - a bivariate expansion sum a_ij u^i ln^j(u) at x = 1 (u = 1 - x),
///     built by termwise integration with the integration constant matched
///     against the series side at x = 1/2.
/// Both sides converge geometrically with ratio <= 1/2 on their half of the
/// interval, so arguments exponentially close to an endpoint stay accurate.
class WordContext {
public:
    explicit WordContext(mpfr_prec_t bits)
        : bits_(bits), terms_(static_cast<std::size_t>(bits) + 48) {}

    mpfr_prec_t bits() const { return bits_; }

    /// Exact Taylor coefficients of H_w at 0 (index n holds the x^n term).
    const std::vector<Rational>& taylor0(const HWord& w) { return member(w).taylor; }

    Real eval_word(const HWord& w, const Real& x, const Real& u) {
        const Member& m = member(w);
        if (x <= 0.5) return eval_series(m.taylor_f, x);
        return eval_bivar(m.exp1, u, log(u));
    }

    /// H_w(1); requires the word to be finite there (no leading 1).
    Real word_at_one(const HWord& w) {
        if (!w.empty() && w.front() == 1)
            throw std::domain_error("word_at_one: divergent word");
        const Member& m = member(w);
        return m.exp1[0][0];
    }

    Real eval_a3(const Real& x, const Real& u) {
        build_a3();
        if (x <= 0.5) return eval_bivar(a3_side0_, x, log(x));
        return eval_series_real(a3_exp1_, u);
    }

    Real eval_expr(const KernelExpr& e, const Real& x, const Real& u) {
        Real lx = (x <= 0.5) ? log(x) : log1p(-u);
        Real sum = Real::of(0L, bits_);
        for (const auto& t : e) {
            Real v = t.a3 ? eval_a3(x, u)
                          : (t.word.empty() ? Real::of(1L, bits_) : eval_word(t.word, x, u));
            if (t.lnpow) v *= pow_si(lx, t.lnpow);
            sum += Real::of(t.coeff, bits_) * v;
        }
        return sum;
    }

private:
    // columns indexed by ln-power j, rows by u-power i
    using Bivar = std::vector<std::vector<Real>>;
    static constexpr int kMaxLog = 8;

    struct Member {
        std::vector<Rational> taylor;  // exact series at 0
        std::vector<Real> taylor_f;
        Bivar exp1;                    // expansion at 1 in (u, ln u)
    };

    const Member& member(const HWord& w) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = members_.find(w); it != members_.end()) return *it->second;
        }
        auto m = build_member(w);
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = members_.emplace(w, std::move(m));
        return *it->second;
    }

    std::unique_ptr<Member> build_member(const HWord& w) {
        if (!w.empty() && w.back() == 0)
            throw std::invalid_argument("WordContext: trailing-zero word");
        bool all_zero = !w.empty();
        for (int l : w)
            if (l != 0) all_zero = false;
        if (all_zero) throw std::invalid_argument("WordContext: pure ln-power word");

        auto m = std::make_unique<Member>();
        if (w.empty()) {
            m->taylor = {Rational(1)};
            m->taylor_f = {Real::of(1L, bits_)};
            m->exp1 = zero_bivar();
            m->exp1[0][0] = Real::of(1L, bits_);
            return m;
        }

        HWord tail(w.begin() + 1, w.end());
        const Member& inner = member(tail);
        int a = w.front();

        m->taylor = integrate_taylor(a, inner.taylor);
        m->taylor_f.reserve(m->taylor.size());
        for (const auto& q : m->taylor) m->taylor_f.push_back(Real::of(q, bits_));

        m->exp1 = integrate_exp1(a, inner.exp1);
        // integration constant from the series side at x = u = 1/2
        Real half = Real::of(Rational(1, 2), bits_);
        Real series_val = eval_series(m->taylor_f, half);
        Real exp_val = eval_bivar(m->exp1, half, -const_ln2(bits_));
        m->exp1[0][0] += series_val - exp_val;
        return m;
    }

    std::vector<Rational> integrate_taylor(int a, const std::vector<Rational>& c) {
        std::size_t K = terms_;
        std::vector<Rational> out(K + 1, Rational(0));
        if (a == 0) {
            for (std::size_t n = 1; n <= K && n < c.size(); ++n)
                if (c[n] != 0) out[n] = c[n] / static_cast<long>(n);
        } else if (a == 1) {
            Rational run(0);
            for (std::size_t n = 1; n <= K; ++n) {
                run += (n - 1 < c.size()) ? c[n - 1] : Rational(0);
                out[n] = run / static_cast<long>(n);
            }
        } else {
            Rational run(0);  // sum_{j<n} (-1)^{n-1-j} c_j
            for (std::size_t n = 1; n <= K; ++n) {
                Rational cn = (n - 1 < c.size()) ? c[n - 1] : Rational(0);
                run = cn - run;
                out[n] = run / static_cast<long>(n);
            }
        }
        return out;
    }

    Bivar zero_bivar() const {
        return Bivar(terms_ + 1, std::vector<Real>(kMaxLog + 1, Real::of(0L, bits_)));
    }

    /// Antiderivative of -f_a(1-u) * B(u, ln u) with zero u->0 limit on the
    /// u^i (i>=1) part; the pure-log part integrates to ln^{j+1}(u)/(j+1).
    Bivar integrate_exp1(int a, const Bivar& B) {
        std::size_t K = terms_;
        Bivar out = zero_bivar();
        if (a == 1) {
            // integrand terms: -b_ij u^{i-1} ln^j u
            for (int j = 0; j <= kMaxLog; ++j) {
                if (B[0][j].is_zero()) continue;
                if (j + 1 > kMaxLog)
                    throw std::logic_error("WordContext: log degree overflow");
                out[0][j + 1] -= B[0][j] / (j + 1);
            }
            for (std::size_t i = 1; i <= K; ++i)
                for (int j = 0; j <= kMaxLog; ++j)
                    if (!B[i][j].is_zero())
                        add_power_integral(out, static_cast<long>(i), j, -B[i][j]);
        } else {
            // f_0(1-u) = sum u^m, f_{-1}(1-u) = sum u^m / 2^{m+1}
            for (int j = 0; j <= kMaxLog; ++j) {
                Real run = Real::of(0L, bits_);
                for (std::size_t i = 0; i <= K; ++i) {
                    if (a == 0) {
                        run += B[i][j];
                    } else {
                        run = mul_2si(run, -1) + mul_2si(B[i][j], -1);
                    }
                    if (!run.is_zero() && i + 1 <= K)
                        add_power_integral(out, static_cast<long>(i) + 1, j, -run);
                }
            }
        }
        return out;
    }

    /// out += c * int u^{i-1} ln^j u du = c u^i sum_r (-1)^r j!/(j-r)! / i^{r+1} ln^{j-r} u
    void add_power_integral(Bivar& out, long i, int j, const Real& c) {
        Real factor = c / i;
        for (int r = 0; r <= j; ++r) {
            out[static_cast<std::size_t>(i)][j - r] += factor;
            factor = factor * static_cast<long>(-(j - r)) / i;
        }
    }

    Real eval_series(const std::vector<Real>& c, const Real& x) const {
        Real acc = Real::of(0L, bits_);
        for (std::size_t n = c.size(); n-- > 0;) acc = acc * x + c[n];
        return acc;
    }
    Real eval_series_real(const std::vector<Real>& c, const Real& x) const {
        return eval_series(c, x);
    }

    Real eval_bivar(const Bivar& b, const Real& u, const Real& L) const {
        if (u.is_zero()) {
            for (int j = 1; j <= kMaxLog; ++j)
                if (!b[0][j].is_zero())
                    throw std::domain_error("eval_bivar: log-divergent at the endpoint");
            return b[0][0];
        }
        Real acc = Real::of(0L, bits_);
        Real Lp = Real::of(1L, bits_);
        for (int j = 0; j <= kMaxLog; ++j) {
            Real col = Real::of(0L, bits_);
            for (std::size_t i = b.size(); i-- > 0;) col = col * u + b[i][j];
            if (!col.is_zero()) acc += col * Lp;
            if (j < kMaxLog) Lp *= L;
        }
        return acc;
    }

    void build_a3();

    mpfr_prec_t bits_;
    std::size_t terms_;
    std::map<HWord, std::unique_ptr<Member>> members_;
    std::mutex mutex_;

    bool a3_built_ = false;
    Bivar a3_side0_;            // expansion at 0 in (x, ln x)
    std::vector<Real> a3_exp1_; // plain Taylor in 1-x at the right endpoint
};

/// A3(x) = int_0^x [Li_4(1-y) - zeta_4] dy/y. The integrand near 0 is the
/// x = 1 expansion of Li_4 read in the variable x, so both A3 expansions
/// come from material the engine already has.
inline void WordContext::build_a3() {
    const Member& li4 = member(hword_polylog(4));  // before taking the lock
    std::lock_guard<std::mutex> lock(mutex_);
    if (a3_built_) return;

    // side 0: integrate [Li4exp1(x, ln x) - zeta4]/x termwise; row i = 0 of the
    // shifted integrand vanishes identically.
    a3_side0_ = zero_bivar();
    for (std::size_t i = 1; i < li4.exp1.size() && i <= terms_; ++i)
        for (int j = 0; j <= kMaxLog; ++j)
            if (!li4.exp1[i][j].is_zero())
                add_power_integral(a3_side0_, static_cast<long>(i), j, li4.exp1[i][j]);

    // right endpoint: dA3/dt = -[Li4(t) - zeta4]/(1-t), t = 1 - x
    Real zeta4 = zeta_ui(4, bits_);
    std::vector<Real> numer(terms_ + 1, Real::of(0L, bits_));
    numer[0] = zeta4;
    for (std::size_t n = 1; n <= terms_ && n < li4.taylor_f.size(); ++n)
        numer[n] = -li4.taylor_f[n];
    a3_exp1_.assign(terms_ + 1, Real::of(0L, bits_));
    Real run = Real::of(0L, bits_);
    for (std::size_t i = 0; i < terms_; ++i) {
        run += numer[i];
        a3_exp1_[i + 1] = run / (static_cast<long>(i) + 1);
    }
    // match A3 at x = 1/2 (t = 1/2)
    Real half = Real::of(Rational(1, 2), bits_);
    Real side0_val = eval_bivar(a3_side0_, half, -const_ln2(bits_));
    Real exp_val = eval_series(a3_exp1_, half);
    a3_exp1_[0] = side0_val - exp_val;
    a3_built_ = true;
}

}  // namespace hsum
