#pragma once

#include "integer.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qyt {

/// A cell of a Young diagram: column and row, both 1-based, rows counted
/// from the bottom (French convention).
struct Cell {
    int column = 1;
    int row = 1;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition, stored as weakly decreasing positive parts.
///
/// Construction normalizes: trailing zeros are stripped, and anything that
/// is not weakly decreasing and nonnegative is rejected.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "4,2,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::string token;
        auto flush = [&] {
            std::size_t used = 0;
            auto trimmed = token;
            trimmed.erase(0, trimmed.find_first_not_of(" \t"));
            trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
            if (trimmed.empty()) throw std::invalid_argument("empty part in partition text");
            int v = std::stoi(trimmed, &used);
            if (used != trimmed.size()) throw std::invalid_argument("bad part '" + trimmed + "'");
            parts.push_back(v);
            token.clear();
        };
        if (text.find_first_not_of(" \t") == std::string_view::npos) return Partition();
        for (char c : text) {
            if (c == ',') flush();
            else token.push_back(c);
        }
        flush();
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Row length, 1-based; zero past the last row.
    int operator[](int row) const {
        return row >= 1 && row <= length() ? parts_[row - 1] : 0;
    }

    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> cols(parts_.front(), 0);
        for (int p : parts_)
            for (int i = 0; i < p; ++i) ++cols[i];
        return Partition(std::move(cols));
    }

    /// Cells in row-major order, bottom row first.
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int j = 1; j <= length(); ++j)
            for (int i = 1; i <= parts_[j - 1]; ++i) out.push_back({i, j});
        return out;
    }

    int content(Cell u) const { return u.column - u.row; }

    int hook(Cell u) const {
        const int arm = (*this)[u.row] - u.column;
        int leg = 0;
        while ((*this)[u.row + leg + 1] >= u.column) ++leg;
        return arm + leg + 1;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.str() << ')'; }

/// Contents c(u) = column - row, in the cell order of Partition::cells().
inline std::vector<int> contents(const Partition& p) {
    std::vector<int> out;
    for (auto u : p.cells()) out.push_back(p.content(u));
    return out;
}

inline std::vector<int> hooks(const Partition& p) {
    std::vector<int> out;
    for (auto u : p.cells()) out.push_back(p.hook(u));
    return out;
}

/// n(lambda) = sum (i-1) lambda_i.
inline int n_stat(const Partition& p) {
    int s = 0;
    for (int i = 1; i <= p.length(); ++i) s += (i - 1) * p[i];
    return s;
}

inline Integer hook_product(const Partition& p) {
    Integer r = 1;
    for (int h : hooks(p)) r *= h;
    return r;
}

/// Dominance order; partitions of different sizes are incomparable.
inline bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    const int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

/// Number of standard Young tableaux, n! / prod h(u).
inline Integer hook_length_count(const Partition& p) {
    return exact_div(factorial(p.size()), hook_product(p));
}

/// Number of semistandard tableaux with entries at most m, prod (m + c(u)) / h(u).
inline Integer hook_content_count(const Partition& p, int m) {
    Rational r = 1;
    for (auto u : p.cells()) r *= Rational(m + p.content(u), p.hook(u));
    if (boost::multiprecision::denominator(r) != 1) {
        throw inexact_error("hook-content product is not integral for " + p.str());
    }
    return boost::multiprecision::numerator(r);
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in lexicographically decreasing order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

/// Partitions of every size 1..max_n, size ascending, each size in partitions_of order.
inline std::vector<Partition> partitions_up_to(int max_n) {
    std::vector<Partition> out;
    for (int n = 1; n <= max_n; ++n) {
        auto ps = partitions_of(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

}  // namespace qyt
