#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hsum/index_vector.hpp"
#include "hsum/rational.hpp"

namespace hsum {

/// Exact evaluation of nested harmonic sums at positive integer argument:
///   S_{b,a...}(N) = sum_{k=1..N} sign(b)^k / k^|b| * S_{a...}(k),  S_{}(k) = 1.
///
/// Values for every (suffix, k<=N) visited are cached, so repeated evaluation
/// across a verification sweep costs one pass per new (v, N) region.
class ExactEvaluator {
public:
    Rational eval(const IndexVector& v, long N) {
        if (N < 1) throw std::domain_error("eval_exact: require N >= 1");
        if (v.empty()) return Rational(1);
        Key key{v.entries(), N};
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;

        // Inner-to-outer pass over suffixes; row_k holds S_suffix(k) for k=1..N.
        std::vector<Rational> inner(static_cast<std::size_t>(N) + 1, Rational(1));
        const auto& e = v.entries();
        for (int j = v.depth() - 1; j >= 0; --j) {
            int a = e[static_cast<std::size_t>(j)];
            std::vector<int> suffix(e.begin() + j, e.end());
            std::vector<Rational> row(static_cast<std::size_t>(N) + 1, Rational(0));
            Rational run(0);
            for (long k = 1; k <= N; ++k) {
                run += term(a, k) * inner[static_cast<std::size_t>(k)];
                row[static_cast<std::size_t>(k)] = run;
            }
            for (long k = 1; k <= N; ++k)
                cache_.emplace(Key{suffix, k}, row[static_cast<std::size_t>(k)]);
            inner = std::move(row);
        }
        return cache_.at(key);
    }

    static Rational term(int a, long k) {
        Rational t;
        mpz_ui_pow_ui(t.get_den_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(a < 0 ? -a : a));
        t.get_num() = (a < 0 && (k & 1)) ? -1 : 1;
        return t;
    }

private:
    using Key = std::pair<std::vector<int>, long>;
    std::map<Key, Rational> cache_;
};

/// S_v(N) as an exact reduced rational. Thread-local cache behind the scenes.
inline Rational eval_exact(const IndexVector& v, long N) {
    thread_local ExactEvaluator ev;
    return ev.eval(v, N);
}

/// N -> infinity behaviour of S_v(N).
struct LimitClass {
    enum class Kind { finite, log_divergent };
    Kind kind = Kind::finite;
    int log_power = 0;  // m with S_v(N) = O(ln^m N), for the divergent class
};

/// Divergence is governed by the leading run of 1-indices only.
inline LimitClass classify_limit(const IndexVector& v) {
    int m = v.leading_ones();
    if (m == 0) return {LimitClass::Kind::finite, 0};
    return {LimitClass::Kind::log_divergent, m};
}

}  // namespace hsum
