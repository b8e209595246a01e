#pragma once

#include "partition.hpp"
#include "perm.hpp"
#include "qpoly.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qyt {

/// Default cap on n for brute-force loops over S_n (9! = 362880).
inline constexpr int kDefaultBruteForceLimit = 9;

/// Ferrers board in an n x n grid: column i (1-based) holds rows 1..h_i,
/// with h_1 <= ... <= h_n.
class FerrersBoard {
public:
    FerrersBoard() = default;

    FerrersBoard(int n, std::vector<int> heights) : n_(n), heights_(std::move(heights)) {
        if (n_ < 0 || static_cast<int>(heights_.size()) != n_) {
            throw std::invalid_argument("board needs exactly n column heights");
        }
        for (int i = 0; i < n_; ++i) {
            if (heights_[i] < 0 || heights_[i] > n_) throw std::invalid_argument("column height outside 0..n");
            if (i > 0 && heights_[i] < heights_[i - 1]) throw std::invalid_argument("Ferrers board heights must weakly increase");
        }
    }

    /// B_lambda: contents sorted weakly decreasing, h_i = c_i + i - 1.
    static FerrersBoard from_partition(const Partition& lambda) {
        auto c = contents(lambda);
        std::sort(c.begin(), c.end(), std::greater<>());
        std::vector<int> h(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) h[i] = c[i] + static_cast<int>(i);
        const int n = static_cast<int>(h.size());
        return FerrersBoard(n, std::move(h));
    }

    static FerrersBoard empty(int n) { return FerrersBoard(n, std::vector<int>(n, 0)); }
    static FerrersBoard full(int n) { return FerrersBoard(n, std::vector<int>(n, n)); }

    /// "n=5; heights=2,2,2,3,3".
    static FerrersBoard parse(std::string_view text) {
        auto semi = text.find(';');
        if (semi == std::string_view::npos) throw std::invalid_argument("board text needs 'n=..; heights=..'");
        auto lhs = text.substr(0, semi);
        auto rhs = text.substr(semi + 1);
        auto strip = [](std::string_view s) {
            while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
            while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
            return s;
        };
        lhs = strip(lhs);
        rhs = strip(rhs);
        if (!lhs.starts_with("n=") || !rhs.starts_with("heights=")) {
            throw std::invalid_argument("board text needs 'n=..; heights=..'");
        }
        const int n = std::stoi(std::string(lhs.substr(2)));
        std::vector<int> h;
        auto list = rhs.substr(8);
        std::string token;
        for (char ch : list) {
            if (ch == ',') {
                h.push_back(std::stoi(token));
                token.clear();
            } else {
                token.push_back(ch);
            }
        }
        if (!token.empty()) h.push_back(std::stoi(token));
        return FerrersBoard(n, std::move(h));
    }

    int n() const { return n_; }
    const std::vector<int>& heights() const { return heights_; }
    int height(int column) const { return heights_.at(column - 1); }

    bool contains(int column, int row) const { return row >= 1 && row <= height(column); }

    /// B x 1: every column one taller. Legal only if no column is full.
    FerrersBoard plus_one() const {
        auto h = heights_;
        for (int& x : h) {
            if (x == n_) throw std::domain_error("plus_one: board already has a full column");
            ++x;
        }
        return FerrersBoard(n_, std::move(h));
    }

    /// Complement inside the n x n grid, rotated by 180 degrees.
    FerrersBoard complement_rotated() const {
        std::vector<int> h(n_);
        for (int i = 0; i < n_; ++i) h[i] = n_ - heights_[n_ - 1 - i];
        return FerrersBoard(n_, std::move(h));
    }

    std::string str() const {
        std::string s = "n=" + std::to_string(n_) + "; heights=";
        for (int i = 0; i < n_; ++i) {
            if (i) s += ',';
            s += std::to_string(heights_[i]);
        }
        return s;
    }

    friend bool operator==(const FerrersBoard&, const FerrersBoard&) = default;

private:
    int n_ = 0;
    std::vector<int> heights_;
};

inline std::ostream& operator<<(std::ostream& os, const FerrersBoard& b) { return os << b.str(); }

/// Every Ferrers board of grid size n (weakly increasing heights in 0..n).
inline std::vector<FerrersBoard> all_ferrers_boards(int n) {
    std::vector<FerrersBoard> out;
    std::vector<int> h(n, 0);
    auto rec = [&](auto& self, int i, int lo) -> void {
        if (i == n) {
            out.emplace_back(n, h);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            h[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace detail {
inline void check_perm_size(std::span<const int> w, const FerrersBoard& b) {
    if (static_cast<int>(w.size()) != b.n()) throw std::invalid_argument("permutation size differs from board size");
}
inline void check_limit(int n, int limit) {
    if (n > limit) {
        throw limit_exceeded("refusing brute force over S_" + std::to_string(n) + " (limit " + std::to_string(limit) + ")");
    }
}
}  // namespace detail

/// |Gamma(pi) intersect B|: columns i with pi_i <= h_i.
inline int hits(std::span<const int> w, const FerrersBoard& b) {
    detail::check_perm_size(w, b);
    int k = 0;
    for (int i = 1; i <= b.n(); ++i) k += w[i - 1] <= b.height(i) ? 1 : 0;
    return k;
}

inline int hits(const Perm& p, const FerrersBoard& b) { return hits(std::span<const int>(p.word()), b); }

/// Per-column circle counts of Dworkin's statistic.
///
/// A cross sits at (j, pi_j). Square (j, r) carries a bullet when the cross of
/// row r lies strictly left of column j. From each cross the walk climbs
/// column j one square at a time, wrapping from row n to row 1, and stops once
/// it reaches the top square h_j of the column; with h_j = 0 it stops at row n.
/// That is (h_j - pi_j) mod n squares, and a cross already on the top square
/// walks nowhere. Every visited square without a bullet gets a circle.
inline std::vector<int> q_weight_columns(std::span<const int> w, const FerrersBoard& b) {
    detail::check_perm_size(w, b);
    const int n = b.n();
    std::vector<int> col_of_row(n + 1, 0);
    for (int i = 1; i <= n; ++i) col_of_row[w[i - 1]] = i;
    std::vector<int> counts(n, 0);
    for (int j = 1; j <= n; ++j) {
        const int start = w[j - 1];
        const int steps = ((b.height(j) - start) % n + n) % n;
        int row = start;
        for (int s = 0; s < steps; ++s) {
            row = row % n + 1;
            if (col_of_row[row] >= j) ++counts[j - 1];
        }
    }
    return counts;
}

inline int q_weight(std::span<const int> w, const FerrersBoard& b) {
    int s = 0;
    for (int c : q_weight_columns(w, b)) s += c;
    return s;
}

inline int q_weight(const Perm& p, const FerrersBoard& b) { return q_weight(std::span<const int>(p.word()), b); }

/// h_0..h_n by brute force over S_n.
inline std::vector<Integer> hit_numbers(const FerrersBoard& b, int limit = kDefaultBruteForceLimit) {
    detail::check_limit(b.n(), limit);
    std::vector<std::int64_t> counts(b.n() + 1, 0);
    for_each_perm(b.n(), [&](const Word& w) { ++counts[hits(w, b)]; });
    return {counts.begin(), counts.end()};
}

/// T_0..T_n with T_k = sum over pi with k hits of q^{q_weight(pi)}.
inline std::vector<QPoly> q_hit_numbers(const FerrersBoard& b, int limit = kDefaultBruteForceLimit) {
    detail::check_limit(b.n(), limit);
    const int n = b.n();
    const int max_weight = n * (n - 1) / 2;
    std::vector<std::vector<std::int64_t>> tally(n + 1, std::vector<std::int64_t>(max_weight + 1, 0));
    for_each_perm(n, [&](const Word& w) { ++tally[hits(w, b)][q_weight(w, b)]; });
    std::vector<QPoly> out;
    for (const auto& row : tally) out.emplace_back(std::vector<Integer>(row.begin(), row.end()));
    return out;
}

}  // namespace qyt
