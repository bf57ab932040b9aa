#pragma once

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hsum/bigfloat.hpp"

namespace hsum {

/// One abscissa of the doubly-exponential grid on (0,1).
/// x + u = 1 exactly; u is the distance to the endpoint nearest the node.
struct QuadNode {
    Real x;
    Real u;  // 1 - x, computed without cancellation
    Real w;
};

struct QuadResult {
    Real value;
    Real error;      // last level-to-level difference (conservative estimate)
    int levels = 0;
    bool converged = false;
};

/// Tanh-sinh quadrature over (0,1) with a shared, lazily grown node table.
///
/// The substitution is x(t) = 1/(1 + exp(-pi sinh t)); endpoint distances are
/// produced directly from the exponential so integrands may be evaluated at
/// x = 1 - 1e-200 without losing digits. Integrands receive (x, 1-x) plus the
/// node coordinates (level, index) so callers can cache expensive kernels.
class TanhSinh {
public:
    explicit TanhSinh(mpfr_prec_t bits, int max_level = 15)
        : bits_(bits), max_level_(max_level) {
        // Stop where the weight alone is negligible at this precision,
        // with margin for ln^k endpoint growth of the integrand.
        double l2 = static_cast<double>(bits_) * 0.6931471805599453 + 60.0;
        t_max_ = std::asinh(l2 / 3.141592653589793);
    }

    int max_level() const { return max_level_; }
    mpfr_prec_t bits() const { return bits_; }

    const std::vector<QuadNode>& level_nodes(int level) const {
        ensure_level(level);
        return levels_[static_cast<std::size_t>(level)];
    }

    /// F: (const Real& x, const Real& u, int level, std::size_t idx) -> Real
    template <typename F>
    QuadResult integrate(F&& f, const Real& tol) const {
        QuadResult res;
        Real sum(bits_);
        sum = Real::of(0L, bits_);
        Real prev(bits_);
        Real h = Real::of(1L, bits_);
        for (int level = 0; level <= max_level_; ++level) {
            const auto& nodes = level_nodes(level);
            Real partial = Real::of(0L, bits_);
            for (std::size_t i = 0; i < nodes.size(); ++i)
                partial += nodes[i].w * f(nodes[i].x, nodes[i].u, level, i);
            if (level == 0) {
                sum = partial;
            } else {
                h /= 2;
                sum = mul_2si(sum, -1) + h * partial;
            }
            if (level >= 2) {
                Real diff = abs(sum - prev);
                res.error = diff;
                res.levels = level;
                Real scale = abs(sum);
                if (scale < 1) scale = Real::of(1L, bits_);
                if (diff <= tol * scale) {
                    res.converged = true;
                    res.value = sum;
                    return res;
                }
            }
            prev = sum;
        }
        res.value = sum;
        res.levels = max_level_;
        res.converged = false;
        return res;
    }

private:
    void ensure_level(int level) const {
        std::lock_guard<std::mutex> lock(mutex_);
        if (level >= static_cast<int>(levels_.size()))
            levels_.resize(static_cast<std::size_t>(level) + 1);
        for (int l = 0; l <= level; ++l) {
            auto& nodes = levels_[static_cast<std::size_t>(l)];
            if (!nodes.empty()) continue;
            double h = std::ldexp(1.0, -l);
            if (l == 0) {
                append_node(nodes, 0.0);
                for (long k = 1; k * h <= t_max_; ++k) append_node(nodes, k * h);
            } else {
                // odd multiples of h only
                for (long k = 1; k * h <= t_max_; k += 2) append_node(nodes, k * h);
            }
            if (nodes.empty()) append_node(nodes, h);  // degenerate guard
        }
    }

    void append_node(std::vector<QuadNode>& nodes, double t) const {
        Real tt = Real::of(t, bits_);
        Real s = const_pi(bits_) * sinh(tt);
        Real em = exp(-s);                  // e^{-pi sinh t}
        Real x = 1 / (1 + em);              // -> 1 as t grows
        Real u = em / (1 + em);             // 1 - x, exact to full precision
        Real w = const_pi(bits_) * cosh(tt) * x * u;
        if (t == 0.0) {
            nodes.push_back(QuadNode{x, u, w});
            return;
        }
        // symmetric pair (t, -t): the mirror node swaps x and u
        nodes.push_back(QuadNode{x, u, w});
        nodes.push_back(QuadNode{u, x, w});
    }

    mpfr_prec_t bits_;
    int max_level_;
    double t_max_;
    mutable std::vector<std::vector<QuadNode>> levels_;
    mutable std::mutex mutex_;
};

}  // namespace hsum
