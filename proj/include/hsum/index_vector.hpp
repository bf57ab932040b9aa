#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsum {

/// Index list (a1,...,ad) of a nested harmonic sum S_{a1,...,ad}.
/// Entries are nonzero signed integers; weight is the sum of their magnitudes.
class IndexVector {
public:
    IndexVector() = default;

    explicit IndexVector(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int a : entries_)
            if (a == 0) throw std::invalid_argument("IndexVector: zero index");
    }

    IndexVector(std::initializer_list<int> entries)
        : IndexVector(std::vector<int>(entries)) {}

    const std::vector<int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int depth() const { return static_cast<int>(entries_.size()); }

    int weight() const {
        int w = 0;
        for (int a : entries_) w += std::abs(a);
        return w;
    }

    int front() const { return entries_.front(); }

    /// Tail (a2,...,ad); the inner sum of the nested definition.
    IndexVector tail() const {
        return IndexVector(std::vector<int>(entries_.begin() + 1, entries_.end()));
    }

    IndexVector prepend(int a) const {
        std::vector<int> e;
        e.reserve(entries_.size() + 1);
        e.push_back(a);
        e.insert(e.end(), entries_.begin(), entries_.end());
        return IndexVector(std::move(e));
    }

    bool has_minus_one() const {
        return std::find(entries_.begin(), entries_.end(), -1) != entries_.end();
    }

    bool all_positive() const {
        return std::all_of(entries_.begin(), entries_.end(), [](int a) { return a > 0; });
    }

    /// Length of the leading run of indices equal to 1; the ln-power of the
    /// divergence of S_v(N) for N -> infinity.
    int leading_ones() const {
        int m = 0;
        for (int a : entries_) {
            if (a != 1) break;
            ++m;
        }
        return m;
    }

    /// Canonical text form: comma-separated signed integers, e.g. "-3,1,-2".
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(entries_[i]);
        }
        return s;
    }

    /// Rank of a single index in the canonical letter order:
    /// 1 < -1 < 2 < -2 < 3 < ... (magnitude first, positive before negative).
    static long letter_rank(int a) {
        return 2L * std::abs(a) + (a < 0 ? 1 : 0);
    }

    /// Canonical order: lexicographic over entries under letter_rank.
    std::strong_ordering operator<=>(const IndexVector& o) const {
        std::size_t n = std::min(entries_.size(), o.entries_.size());
        for (std::size_t i = 0; i < n; ++i) {
            long l = letter_rank(entries_[i]), r = letter_rank(o.entries_[i]);
            if (l != r) return l <=> r;
        }
        return entries_.size() <=> o.entries_.size();
    }
    bool operator==(const IndexVector& o) const { return entries_ == o.entries_; }

private:
    std::vector<int> entries_;
};

/// Parses the comma-separated canonical form, e.g. "-3,1,-2".
inline IndexVector parse_index_vector(const std::string& s) {
    std::vector<int> entries;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("parse_index_vector: empty entry");
        entries.push_back(std::stoi(tok));
        pos = next + 1;
    }
    if (entries.empty()) throw std::invalid_argument("parse_index_vector: empty list");
    return IndexVector(std::move(entries));
}

/// All index vectors of weight exactly w in canonical (lexicographic) order.
/// With exclude_minus_one set, no entry equals -1.
inline std::vector<IndexVector> enumerate_weight(int w, bool exclude_minus_one) {
    if (w < 1 || w > 64) throw std::invalid_argument("enumerate_weight: weight out of range");
    std::vector<IndexVector> out;
    std::vector<int> cur;
    // Letters in rank order at each position.
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int mag = 1; mag <= rem; ++mag) {
            for (int sign : {+1, -1}) {
                int a = sign * mag;
                if (a == -1 && exclude_minus_one) continue;
                cur.push_back(a);
                self(self, rem - mag);
                cur.pop_back();
            }
        }
    };
    rec(rec, w);
    return out;
}

/// True if the entry list is a Lyndon word under the canonical letter order:
/// strictly smaller than every proper rotation (hence aperiodic).
inline bool is_lyndon(const IndexVector& v) {
    const auto& e = v.entries();
    int d = v.depth();
    if (d == 1) return true;
    for (int r = 1; r < d; ++r) {
        // compare e with its rotation by r
        for (int i = 0; i < d; ++i) {
            long a = IndexVector::letter_rank(e[i]);
            long b = IndexVector::letter_rank(e[(i + r) % d]);
            if (a < b) break;
            if (a > b) return false;
            if (i == d - 1) return false;  // equal to a proper rotation: periodic
        }
    }
    return true;
}

}  // namespace hsum
