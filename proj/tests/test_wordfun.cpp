#include <catch2/catch_amalgamated.hpp>

#include "hsum/tanh_sinh.hpp"
#include "hsum/wordfun.hpp"

using namespace hsum;

namespace {
const mpfr_prec_t kBits = digits_to_bits(60);

Real ten_pow(long e) { return pow_si(Real::of(10L, kBits), e); }

void check_close(const Real& a, const Real& b, long digits) {
    CAPTURE(a.str(30), b.str(30), digits);
    CHECK(abs(a - b) < ten_pow(-digits));
}

WordContext& ctx() {
    static WordContext c(kBits);
    return c;
}

Real eval(const HWord& w, double xv) {
    Real x = Real::of(xv, kBits);
    return ctx().eval_word(w, x, 1 - x);
}

/// Independent oracle: S_{p,n}(x) by direct tanh-sinh quadrature of the
/// defining log-kernel integral.
Real nielsen_oracle(int p, int n, const Real& x, const Real& ux) {
    TanhSinh q(kBits);
    Real tol = ten_pow(-55);
    auto r = q.integrate(
        [&](const Real& z, const Real& uz, int, std::size_t) {
            // 1 - x z = uz + z (1 - x), exact near both endpoints
            Real one_minus_xz = uz + z * ux;
            Real val = pow_si(log(one_minus_xz), n) / z;
            if (p > 1) val *= pow_si(log(z), p - 1);
            return val;
        },
        tol);
    REQUIRE(r.converged);
    Rational pref(((p + n + 1) % 2 == 0) ? 1 : -1);
    for (int i = 2; i < p; ++i) pref /= i;
    for (int i = 2; i <= n; ++i) pref /= i;
    return Real::of(pref, kBits) * r.value;
}
}  // namespace

TEST_CASE("exact Taylor coefficients at 0") {
    auto& li2 = ctx().taylor0(hword_polylog(2));
    CHECK(li2[1] == 1);
    CHECK(li2[2] == parse_rational("1/4"));
    CHECK(li2[7] == parse_rational("1/49"));

    auto& s22 = ctx().taylor0(hword_nielsen(2, 2));
    CHECK(s22[1] == 0);
    CHECK(s22[2] == parse_rational("1/8"));
    CHECK(s22[3] == parse_rational("1/18"));
    CHECK(s22[4] == parse_rational("11/384"));
}

TEST_CASE("depth-one words across both expansion sides") {
    for (double xv : {0.08, 0.35, 0.5, 0.62, 0.93}) {
        Real x = Real::of(xv, kBits);
        check_close(eval(HWord{1}, xv), -log(1 - x), 56);
        check_close(eval(HWord{-1}, xv), log1p(x), 56);
    }
    // exponentially close to 1
    Real u = ten_pow(-35);
    Real x = 1 - u;
    check_close(ctx().eval_word(HWord{1}, x, u), -log(u), 56);
}

TEST_CASE("polylog words agree with the dedicated evaluator") {
    for (int k = 2; k <= 6; ++k) {
        for (double xv : {0.2, 0.5, 0.77, 0.999}) {
            Real x = Real::of(xv, kBits);
            Real u = 1 - x;
            check_close(ctx().eval_word(hword_polylog(k), x, u), polylog_xu(k, x, u), 55);
        }
        check_close(ctx().word_at_one(hword_polylog(k)), zeta_ui(k, kBits), 55);
    }
}

TEST_CASE("argument negation rule") {
    // H_{0,-1}(x) = -Li_2(-x)
    for (double xv : {0.3, 0.8, 0.97}) {
        Real x = Real::of(xv, kBits);
        Real u = 1 - x;
        check_close(ctx().eval_word(HWord{0, -1}, x, u), -polylog_neg_xu(2, x, u), 55);
    }
    // via the kernel helper
    KernelExpr li3 = {{Rational(1), 0, hword_polylog(3), false}};
    KernelExpr li3neg = kernel_negate_argument(li3);
    Real x = Real::of(0.85, kBits);
    Real u = 1 - x;
    check_close(ctx().eval_expr(li3neg, x, u), polylog_neg_xu(3, x, u), 55);
}

TEST_CASE("nielsen words against the integral oracle") {
    struct Probe { int p, n; double x; };
    for (auto [p, n, xv] : {Probe{1, 2, 0.3}, Probe{1, 2, 0.85}, Probe{2, 2, 0.5},
                            Probe{2, 2, 0.92}, Probe{3, 2, 0.65}, Probe{2, 3, 0.4},
                            Probe{1, 4, 0.75}}) {
        Real x = Real::of(xv, kBits);
        Real u = 1 - x;
        Real engine = ctx().eval_word(hword_nielsen(p, n), x, u);
        Real oracle = nielsen_oracle(p, n, x, u);
        check_close(engine, oracle, 50);
    }
}

TEST_CASE("nielsen value at 1 matches the zeta_2^2/10 closed form") {
    Real s22 = ctx().word_at_one(hword_nielsen(2, 2));
    Real z2 = zeta_ui(2, kBits);
    check_close(s22, z2 * z2 / 10, 55);

    // S_{1,k}(1) = zeta_{k+1}
    for (int k = 2; k <= 4; ++k)
        check_close(ctx().word_at_one(hword_nielsen(1, k)), zeta_ui(k + 1, kBits), 55);

    // S_{3,2}(1) = 2 zeta_5 - zeta_2 zeta_3
    check_close(ctx().word_at_one(hword_nielsen(3, 2)),
                2 * zeta_ui(5, kBits) - zeta_ui(2, kBits) * zeta_ui(3, kBits), 55);
    // S_{2,3}(1) = 2 zeta_5 - zeta_2 zeta_3
    check_close(ctx().word_at_one(hword_nielsen(2, 3)),
                2 * zeta_ui(5, kBits) - zeta_ui(2, kBits) * zeta_ui(3, kBits), 55);
}

TEST_CASE("series and endpoint expansions agree in the overlap") {
    std::vector<HWord> words = {
        hword_polylog(2), hword_nielsen(2, 2), hword_nielsen(1, 4),
        {0, 0, -1, 0, 1}, {0, -1, 0, 1, 1}, {0, -1, -1},
    };
    Real x = Real::of(0.55, kBits);
    Real u = 1 - x;
    for (const auto& w : words) {
        // series side still converges at 0.55; compare against the bivar side
        WordContext fresh(kBits);
        const auto& taylor = fresh.taylor0(w);
        Real s = Real::of(0L, kBits);
        for (std::size_t n = taylor.size(); n-- > 1;)
            s = (s + Real::of(taylor[n], kBits)) * x;  // Horner with c_0 = 0
        Real b = ctx().eval_word(w, x, u);
        check_close(s, b, 52);
    }
}

TEST_CASE("A1 words and value at the endpoints") {
    // A1 = int_0^x Li_2^2(y) dy / y = sum over shuffles of two Li_2 words
    KernelExpr li2 = {{Rational(1), 0, hword_polylog(2), false}};
    KernelExpr sq = kernel_mul(li2, li2);
    KernelExpr a1;
    for (auto& t : sq) {
        HWord w = t.word;
        w.insert(w.begin(), 0);
        a1.push_back({t.coeff, 0, w, false});
    }
    // A1(1) = -3 zeta_5 + 2 zeta_2 zeta_3
    Real at1 = ctx().eval_expr(a1, Real::of(1L, kBits), Real::of(0L, kBits));
    check_close(at1, -3 * zeta_ui(5, kBits) + 2 * zeta_ui(2, kBits) * zeta_ui(3, kBits), 54);

    // A1(-1) = -17/16 zeta_5 + 3/4 zeta_2 zeta_3
    KernelExpr a1neg = kernel_negate_argument(a1);
    Real atm1 = ctx().eval_expr(a1neg, Real::of(1L, kBits), Real::of(0L, kBits));
    check_close(atm1,
                Real::of(parse_rational("-17/16"), kBits) * zeta_ui(5, kBits) +
                    Real::of(parse_rational("3/4"), kBits) * zeta_ui(2, kBits) * zeta_ui(3, kBits),
                54);
}

TEST_CASE("A3 expansions and endpoint value") {
    // A3(0) = 0 and A3(1) = -3 zeta_5 + zeta_2 zeta_3
    Real one = Real::of(1L, kBits);
    Real zero = Real::of(0L, kBits);
    Real at1 = ctx().eval_a3(one, zero);
    check_close(at1, -3 * zeta_ui(5, kBits) + zeta_ui(2, kBits) * zeta_ui(3, kBits), 53);

    // both sides agree in the overlap
    Real xa = Real::of(0.49, kBits), xb = Real::of(0.51, kBits);
    Real va = ctx().eval_a3(xa, 1 - xa);
    Real vb = ctx().eval_a3(xb, 1 - xb);
    CHECK(abs(vb - va) < Real::of(0.05, kBits));  // continuity sanity
    // direct quadrature oracle at x = 0.7
    TanhSinh q(kBits);
    Real x = Real::of(0.7, kBits);
    auto r = q.integrate(
        [&](const Real& y, const Real& uy, int, std::size_t) {
            Real arg = 1 - x * y;      // stays away from 0 for x = 0.7
            (void)uy;
            return (polylog_xu(4, arg, x * y) - zeta_ui(4, kBits)) / y;
        },
        ten_pow(-55));
    REQUIRE(r.converged);
    check_close(ctx().eval_a3(x, 1 - x), r.value, 50);
}

TEST_CASE("S_{1,k}(1-x) closed forms match the reflected word") {
    // S_{1,2}(1-x) = -Li_3(x) + ln x Li_2(x) + 1/2 ln(1-x) ln^2 x + zeta_3
    Real x = Real::of(0.3, kBits);
    Real ux = 1 - x;
    Real lhs = ctx().eval_word(hword_nielsen(1, 2), ux, x);  // argument 1-x
    Real rhs = -polylog_xu(3, x, ux) + log(x) * polylog_xu(2, x, ux) +
               mul_2si(log(ux) * log(x) * log(x), -1) + zeta_ui(3, kBits);
    check_close(lhs, rhs, 55);
}
