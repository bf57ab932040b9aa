#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hsum/harmonic.hpp"
#include "hsum/index_vector.hpp"
#include "hsum/rational.hpp"

namespace hsum {

/// Merged index of the quasi-shuffle algebra: a^b = sign(a)sign(b)(|a|+|b|).
inline int wedge(int a, int b) {
    int s = ((a < 0) != (b < 0)) ? -1 : 1;
    return s * (std::abs(a) + std::abs(b));
}

/// Monomial: multiset of index vectors, kept sorted canonically.
using Monomial = std::vector<IndexVector>;

inline Monomial make_monomial(std::vector<IndexVector> factors) {
    std::sort(factors.begin(), factors.end());
    return factors;
}

inline int monomial_weight(const Monomial& m) {
    int w = 0;
    for (const auto& f : m) w += f.weight();
    return w;
}

/// Rational-coefficient polynomial in harmonic sums (monomials are multisets
/// of index vectors). Zero coefficients are never stored.
class SumPolynomial {
public:
    SumPolynomial() = default;

    static SumPolynomial single(const IndexVector& v, Rational c = Rational(1)) {
        SumPolynomial p;
        p.add(Monomial{v}, c);
        return p;
    }

    static SumPolynomial constant(Rational c) {
        SumPolynomial p;
        p.add(Monomial{}, c);
        return p;
    }

    void add(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SumPolynomial& operator+=(const SumPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }

    SumPolynomial& operator-=(const SumPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }

    SumPolynomial& operator*=(const Rational& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend SumPolynomial operator*(const SumPolynomial& a, const SumPolynomial& b) {
        SumPolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                std::sort(m.begin(), m.end());
                out.add(m, ca * cb);
            }
        return out;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Exact pointwise value at integer N via eval_exact of every factor.
    Rational evaluate(long N) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& f : m) t *= eval_exact(f, N);
            total += t;
        }
        return total;
    }

    /// Every monomial has the same total weight (0 for empty polynomial).
    std::optional<int> homogeneous_weight() const {
        std::optional<int> w;
        for (const auto& [m, c] : terms_) {
            int mw = monomial_weight(m);
            if (!w) w = mw;
            else if (*w != mw) return std::nullopt;
        }
        return w ? w : std::optional<int>(0);
    }

private:
    std::map<Monomial, Rational> terms_;
};

namespace detail {

using Word = std::vector<int>;

inline void stuffle_rec(const Word& u, std::size_t i, const Word& v, std::size_t j,
                        Word& prefix, long sign, std::map<Word, long>& out) {
    if (i == u.size() && j == v.size()) {
        out[prefix] += sign;
        return;
    }
    if (i < u.size()) {
        prefix.push_back(u[i]);
        stuffle_rec(u, i + 1, v, j, prefix, sign, out);
        prefix.pop_back();
    }
    if (j < v.size()) {
        prefix.push_back(v[j]);
        stuffle_rec(u, i, v, j + 1, prefix, sign, out);
        prefix.pop_back();
    }
    if (i < u.size() && j < v.size()) {
        // Merged-head term; non-strict nesting makes it enter with a minus.
        prefix.push_back(wedge(u[i], v[j]));
        stuffle_rec(u, i + 1, v, j + 1, prefix, -sign, out);
        prefix.pop_back();
    }
}

/// Quasi-shuffle expansion of S_u * S_v as signed multiplicities over words.
inline std::map<Word, long> stuffle_words(const Word& u, const Word& v) {
    std::map<Word, long> out;
    Word prefix;
    stuffle_rec(u, 0, v, 0, prefix, 1, out);
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace detail

/// S_u(N) * S_v(N) as a linear combination of single harmonic sums,
/// valid pointwise for every N >= 1.
inline SumPolynomial stuffle_product(const IndexVector& u, const IndexVector& v) {
    SumPolynomial out;
    for (const auto& [w, mult] : detail::stuffle_words(u.entries(), v.entries()))
        out.add(Monomial{IndexVector(w)}, Rational(mult));
    return out;
}

struct EulerReport {
    Rational lhs;  // S_{a,b}(N) + S_{b,a}(N)
    Rational rhs;  // S_a(N) S_b(N) + S_{a^b}(N)
    bool equal = false;
};

inline EulerReport euler_pair(int a, int b, long N) {
    if (a == 0 || b == 0) throw std::invalid_argument("euler_pair: zero index");
    EulerReport r;
    r.lhs = eval_exact(IndexVector{a, b}, N) + eval_exact(IndexVector{b, a}, N);
    r.rhs = eval_exact(IndexVector{a}, N) * eval_exact(IndexVector{b}, N) +
            eval_exact(IndexVector{wedge(a, b)}, N);
    r.equal = (r.lhs == r.rhs);
    return r;
}

struct BasisCensus {
    long total = 0;      // number of index vectors of the given weight
    long algebraic = 0;  // number of quasi-shuffle-irreducible ones (Lyndon words)
};

inline BasisCensus basis_census(int w, bool exclude_minus_one) {
    auto words = enumerate_weight(w, exclude_minus_one);
    BasisCensus c;
    c.total = static_cast<long>(words.size());
    for (const auto& v : words)
        if (is_lyndon(v)) ++c.algebraic;
    return c;
}

/// Reduction of harmonic sums to polynomials over the Lyndon-word basis.
///
/// Relation tables are built per weight by Gaussian elimination over the
/// quasi-shuffle relations S_l * S_r = stuffle(l, r) with (l, r) the
/// Chen-Fox-Lyndon head/tail of each reducible word; completeness of the
/// table is checked by rank.
class ReductionContext {
public:
    SumPolynomial reduce(const IndexVector& v) {
        if (is_lyndon(v)) return SumPolynomial::single(v);
        // Words without -1 are closed under the relations used, so the
        // smaller alphabet suffices whenever v itself avoids -1.
        build_weight(v.weight(), v.has_minus_one());
        auto it = table_.find(v.entries());
        if (it == table_.end())
            throw std::logic_error("algebraic_reduce: no table entry for " + v.str());
        return it->second;
    }

private:
    /// Longest Lyndon prefix (first Chen-Fox-Lyndon factor) split.
    static std::pair<IndexVector, IndexVector> cfl_split(const IndexVector& v) {
        const auto& e = v.entries();
        for (int len = v.depth() - 1; len >= 1; --len) {
            IndexVector head(std::vector<int>(e.begin(), e.begin() + len));
            if (is_lyndon(head))
                return {head, IndexVector(std::vector<int>(e.begin() + len, e.end()))};
        }
        throw std::logic_error("cfl_split: unreachable");
    }

    void build_weight(int W, bool with_minus_one) {
        auto& done = with_minus_one ? built_signed_ : built_;
        if (static_cast<int>(done.size()) > W && done[W]) return;
        // Lower weights first: RHS products recurse into them.
        for (int w = 2; w < W; ++w) build_weight(w, with_minus_one);

        auto words = enumerate_weight(W, !with_minus_one);
        std::vector<IndexVector> reducible;
        for (const auto& v : words)
            if (!is_lyndon(v)) reducible.push_back(v);

        // Column order for elimination.
        std::map<std::vector<int>, std::size_t> col;
        for (std::size_t i = 0; i < reducible.size(); ++i)
            col[reducible[i].entries()] = i;

        struct Row {
            std::vector<Rational> a;  // coefficients on reducible words
            SumPolynomial rhs;        // polynomial over Lyndon monomials
        };
        std::vector<Row> rows;
        rows.reserve(reducible.size());

        for (const auto& w : reducible) {
            auto [head, rest] = cfl_split(w);
            Row row;
            row.a.assign(reducible.size(), Rational(0));
            row.rhs = SumPolynomial::single(head) * reduce_rec(rest, with_minus_one);
            for (const auto& [t, mult] : detail::stuffle_words(head.entries(), rest.entries())) {
                IndexVector tv{t};
                if (auto it = col.find(t); it != col.end())
                    row.a[it->second] += mult;
                else
                    row.rhs.add(Monomial{tv}, Rational(-mult));
            }
            rows.push_back(std::move(row));
        }

        // Gaussian elimination; every reducible word must get a pivot.
        std::size_t ncols = reducible.size();
        std::vector<std::optional<std::size_t>> pivot_row(ncols);
        std::vector<std::size_t> pivot_order;  // columns in assignment order
        for (std::size_t r = 0; r < rows.size(); ++r) {
            // Reduce by existing pivots.
            for (std::size_t cidx = 0; cidx < ncols; ++cidx) {
                if (rows[r].a[cidx] == 0 || !pivot_row[cidx]) continue;
                const Row& pr = rows[*pivot_row[cidx]];
                Rational f = rows[r].a[cidx];  // pivot rows are normalized
                for (std::size_t k = 0; k < ncols; ++k)
                    if (pr.a[k] != 0) rows[r].a[k] -= f * pr.a[k];
                SumPolynomial scaled = pr.rhs;
                scaled *= f;
                rows[r].rhs -= scaled;
            }
            std::size_t p = ncols;
            for (std::size_t cidx = 0; cidx < ncols; ++cidx)
                if (rows[r].a[cidx] != 0) { p = cidx; break; }
            if (p == ncols) continue;  // dependent relation
            Rational inv = Rational(1) / rows[r].a[p];
            for (auto& x : rows[r].a) x *= inv;
            rows[r].rhs *= inv;
            pivot_row[p] = r;
            pivot_order.push_back(p);
        }
        if (pivot_order.size() != ncols)
            throw std::logic_error("algebraic_reduce: relation table rank deficiency at weight " +
                                   std::to_string(W));

        // A row can only reference pivots assigned after it; clearing in
        // reverse assignment order leaves pure Lyndon right-hand sides.
        for (std::size_t i = pivot_order.size(); i-- > 0;) {
            Row& pr = rows[*pivot_row[pivot_order[i]]];
            for (std::size_t k = 0; k < ncols; ++k) {
                if (k == pivot_order[i] || pr.a[k] == 0 || !pivot_row[k]) continue;
                Rational f = pr.a[k];
                const Row& other = rows[*pivot_row[k]];
                for (std::size_t j = 0; j < ncols; ++j)
                    if (other.a[j] != 0) pr.a[j] -= f * other.a[j];
                SumPolynomial scaled = other.rhs;
                scaled *= f;
                pr.rhs -= scaled;
            }
        }

        for (std::size_t cidx = 0; cidx < ncols; ++cidx)
            table_[reducible[cidx].entries()] = rows[*pivot_row[cidx]].rhs;

        if (static_cast<int>(done.size()) <= W) done.resize(static_cast<std::size_t>(W) + 1, false);
        done[W] = true;
    }

    SumPolynomial reduce_rec(const IndexVector& v, bool with_minus_one) {
        if (is_lyndon(v)) return SumPolynomial::single(v);
        build_weight(v.weight(), with_minus_one);
        return table_.at(v.entries());
    }

    std::map<std::vector<int>, SumPolynomial> table_;
    std::vector<bool> built_;
    std::vector<bool> built_signed_;
};

/// Expresses S_v as a polynomial over the Lyndon (algebraically irreducible)
/// basis; pointwise equal to S_v at every N. Idempotent on basis elements.
inline SumPolynomial algebraic_reduce(const IndexVector& v) {
    thread_local ReductionContext ctx;
    return ctx.reduce(v);
}

}  // namespace hsum
