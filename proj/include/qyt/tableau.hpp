#pragma once

#include "partition.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace qyt {

/// A filling of a Young diagram. Rows are listed bottom to top; each row is
/// read left to right. Equality is structural.
class Tableau {
public:
    Tableau() = default;

    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        for (std::size_t j = 1; j < rows_.size(); ++j) {
            if (rows_[j].size() > rows_[j - 1].size()) throw std::invalid_argument("tableau rows must weakly shrink upward");
            if (rows_[j].empty()) throw std::invalid_argument("tableau has an empty interior row");
        }
    }

    Tableau(std::initializer_list<std::vector<int>> rows) : Tableau(std::vector<std::vector<int>>(rows)) {}

    /// Parses "1,1/2,2/3": rows bottom to top separated by '/'.
    static Tableau parse(std::string_view text) {
        std::vector<std::vector<int>> rows;
        if (text.empty()) return Tableau();
        std::size_t start = 0;
        while (true) {
            auto slash = text.find('/', start);
            rows.push_back(parse_row(text.substr(start, slash == std::string_view::npos ? slash : slash - start)));
            if (slash == std::string_view::npos) break;
            start = slash + 1;
        }
        return Tableau(std::move(rows));
    }

    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            if (j) s += '/';
            for (std::size_t i = 0; i < rows_[j].size(); ++i) {
                if (i) s += ',';
                s += std::to_string(rows_[j][i]);
            }
        }
        return s;
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    Partition shape() const {
        std::vector<int> parts;
        for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
        return Partition(std::move(parts));
    }

    int size() const {
        int n = 0;
        for (const auto& r : rows_) n += static_cast<int>(r.size());
        return n;
    }

    int at(Cell u) const { return rows_.at(u.row - 1).at(u.column - 1); }

    int max_entry() const {
        int m = 0;
        for (const auto& r : rows_)
            for (int v : r) m = std::max(m, v);
        return m;
    }

    /// wt(T): multiplicities of 1, 2, ..., max_entry().
    std::vector<int> weight() const {
        std::vector<int> w(max_entry(), 0);
        for (const auto& r : rows_)
            for (int v : r) ++w[v - 1];
        return w;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    static std::vector<int> parse_row(std::string_view piece) {
        std::vector<int> row;
        std::string token;
        auto flush = [&] {
            if (token.empty()) throw std::invalid_argument("empty tableau entry");
            std::size_t used = 0;
            row.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument("bad tableau entry: " + token);
            token.clear();
        };
        for (char c : piece) {
            if (c == ',') flush();
            else if (c != ' ') token.push_back(c);
        }
        flush();
        return row;
    }

    std::vector<std::vector<int>> rows_;
};

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << '[' << t.str() << ']'; }

/// Rows weakly increase to the right, columns strictly increase upward, entries positive.
inline bool is_ssyt(const Tableau& t) {
    const auto& rows = t.rows();
    for (std::size_t j = 0; j < rows.size(); ++j) {
        for (std::size_t i = 0; i < rows[j].size(); ++i) {
            if (rows[j][i] < 1) return false;
            if (i > 0 && rows[j][i] < rows[j][i - 1]) return false;
            if (j > 0 && rows[j][i] <= rows[j - 1][i]) return false;
        }
    }
    return true;
}

inline bool is_syt(const Tableau& t) {
    if (!is_ssyt(t)) return false;
    auto w = t.weight();
    return static_cast<int>(w.size()) == t.size() && std::all_of(w.begin(), w.end(), [](int c) { return c == 1; });
}

namespace detail {
/// Lowest and highest row (1-based) holding each value; 0 where absent.
inline std::pair<std::vector<int>, std::vector<int>> row_range_by_value(const Tableau& t) {
    const int m = t.max_entry();
    std::vector<int> lo(m + 1, 0), hi(m + 1, 0);
    for (std::size_t j = 0; j < t.rows().size(); ++j) {
        const int row = static_cast<int>(j + 1);
        for (int v : t.rows()[j]) {
            if (lo[v] == 0 || row < lo[v]) lo[v] = row;
            hi[v] = std::max(hi[v], row);
        }
    }
    return {lo, hi};
}
}  // namespace detail

/// Quasi-Yamanouchi: SSYT in which, for each value i >= 2 present, some
/// instance of i lies in a strictly higher row than some instance of i-1.
/// Values are necessarily 1..max with no gaps (a missing i-1 fails the test).
inline bool is_qyt(const Tableau& t) {
    if (!is_ssyt(t)) return false;
    auto [lo, hi] = detail::row_range_by_value(t);
    for (int v = 2; v <= t.max_entry(); ++v) {
        if (hi[v] == 0) continue;
        if (hi[v - 1] == 0 || hi[v] <= lo[v - 1]) return false;
    }
    return true;
}

/// Every SSYT of the given shape with entries in 1..m, in lexicographic
/// order of the row-major reading (bottom row first).
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, int m) {
    std::vector<Tableau> out;
    if (shape.length() > m) return out;
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(p, 0);
    const auto cells = shape.cells();
    auto rec = [&](auto& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.emplace_back(rows);
            return;
        }
        const auto [i, j] = cells[idx];
        int lo = 1;
        if (i > 1) lo = std::max(lo, rows[j - 1][i - 2]);
        if (j > 1) lo = std::max(lo, rows[j - 2][i - 1] + 1);
        // Column still needs room for the rows stacked above this cell.
        int above = 0;
        while (shape[j + above + 1] >= i) ++above;
        for (int v = lo; v <= m - above; ++v) {
            rows[j - 1][i - 1] = v;
            self(self, idx + 1);
        }
        rows[j - 1][i - 1] = 0;
    };
    rec(rec, 0);
    return out;
}

/// Every SYT of the given shape, built by placing 1, 2, ..., n in corners.
inline std::vector<Tableau> enumerate_syt(const Partition& shape) {
    std::vector<Tableau> out;
    const int n = shape.size();
    std::vector<std::vector<int>> rows(shape.length());
    auto rec = [&](auto& self, int v) -> void {
        if (v > n) {
            out.emplace_back(rows);
            return;
        }
        for (int j = 0; j < shape.length(); ++j) {
            const auto len = rows[j].size();
            if (static_cast<int>(len) < shape[j + 1] && (j == 0 || rows[j - 1].size() > len)) {
                rows[j].push_back(v);
                self(self, v + 1);
                rows[j].pop_back();
            }
        }
    };
    rec(rec, 1);
    return out;
}

/// Row (1-based) of each entry 1..n of a standard tableau; index 0 unused.
inline std::vector<int> rows_by_entry(const Tableau& t) {
    std::vector<int> row(t.size() + 1, 0);
    for (std::size_t j = 0; j < t.rows().size(); ++j)
        for (int v : t.rows()[j]) row.at(v) = static_cast<int>(j + 1);
    return row;
}

/// Des(T) for an SYT: i such that i+1 lies in a strictly higher row than i.
inline std::vector<int> descent_set(const Tableau& syt) {
    if (!is_syt(syt)) throw std::invalid_argument("descent_set needs a standard tableau: " + syt.str());
    auto row = rows_by_entry(syt);
    std::vector<int> d;
    for (int i = 1; i < syt.size(); ++i)
        if (row[i + 1] > row[i]) d.push_back(i);
    return d;
}

/// Runs of an SYT as closed intervals [first, last] of entries.
inline std::vector<std::pair<int, int>> runs(const Tableau& syt) {
    std::vector<std::pair<int, int>> out;
    int start = 1;
    for (int d : descent_set(syt)) {
        out.emplace_back(start, d);
        start = d + 1;
    }
    if (syt.size() > 0) out.emplace_back(start, syt.size());
    return out;
}

/// Relabels every entry of the i-th run to i. Produces a QYT whose maximum
/// entry equals the number of runs.
inline Tableau destandardize(const Tableau& syt) {
    auto rs = runs(syt);
    std::vector<int> run_of(syt.size() + 1, 0);
    for (std::size_t r = 0; r < rs.size(); ++r)
        for (int v = rs[r].first; v <= rs[r].second; ++v) run_of[v] = static_cast<int>(r + 1);
    auto rows = syt.rows();
    for (auto& row : rows)
        for (int& v : row) v = run_of[v];
    return Tableau(std::move(rows));
}

/// Inverse of destandardize: equal entries are numbered left to right
/// (they form a horizontal strip, so columns are distinct).
inline Tableau standardize(const Tableau& t) {
    if (!is_ssyt(t)) throw std::invalid_argument("standardize needs a semistandard tableau: " + t.str());
    std::vector<std::tuple<int, int, int>> order;  // (value, column, row)
    for (std::size_t j = 0; j < t.rows().size(); ++j)
        for (std::size_t i = 0; i < t.rows()[j].size(); ++i)
            order.emplace_back(t.rows()[j][i], static_cast<int>(i), static_cast<int>(j));
    std::sort(order.begin(), order.end());
    auto rows = t.rows();
    int next = 1;
    for (auto [v, i, j] : order) rows[j][i] = next++;
    return Tableau(std::move(rows));
}

namespace detail {
inline Tableau as_standard(const Tableau& t) { return is_syt(t) ? t : standardize(t); }
}  // namespace detail

/// Descent set of an SYT, or of the standardization of a QYT.
inline std::vector<int> tableau_descents(const Tableau& t) { return descent_set(detail::as_standard(t)); }

inline int tableau_des(const Tableau& t) { return static_cast<int>(tableau_descents(t).size()); }

inline int tableau_maj(const Tableau& t) {
    int s = 0;
    for (int d : tableau_descents(t)) s += d;
    return s;
}

/// ch(1) = 0, ch(i+1) = ch(i) + [i in Des(T)], ch(T) = sum of ch(i).
inline int charge(const Tableau& t) {
    const auto d = tableau_descents(t);
    const int n = t.size();
    int level = 0, total = 0;
    std::size_t next = 0;
    for (int i = 1; i <= n; ++i) {
        if (i > 1 && next < d.size() && d[next] == i - 1) {
            ++level;
            ++next;
        }
        total += level;
    }
    return total;
}

/// QYT of the shape with largest entry exactly m: SYT with m runs, destandardized.
inline std::vector<Tableau> enumerate_qyt_exact(const Partition& shape, int m) {
    std::vector<Tableau> out;
    for (const auto& syt : enumerate_syt(shape)) {
        auto q = destandardize(syt);
        if (q.max_entry() == m) out.push_back(std::move(q));
    }
    return out;
}

inline std::vector<Tableau> enumerate_qyt_at_most(const Partition& shape, int m) {
    std::vector<Tableau> out;
    for (const auto& syt : enumerate_syt(shape)) {
        auto q = destandardize(syt);
        if (q.max_entry() <= m) out.push_back(std::move(q));
    }
    return out;
}

inline std::vector<Tableau> enumerate_qyt(const Partition& shape) {
    std::vector<Tableau> out;
    for (const auto& syt : enumerate_syt(shape)) out.push_back(destandardize(syt));
    return out;
}

/// counts[m] = |QYT_{=m}(shape)| for m = 0..n (counts[0] is 0 unless shape is empty).
inline std::vector<Integer> qyt_counts(const Partition& shape) {
    std::vector<Integer> counts(shape.size() + 1, 0);
    if (shape.empty()) {
        counts[0] = 1;
        return counts;
    }
    for (const auto& syt : enumerate_syt(shape)) counts[descent_set(syt).size() + 1] += 1;
    return counts;
}

/// Kostka number K_{shape, weight}: SSYT of the shape with the given weight,
/// counted by stacking horizontal strips of sizes weight_1, weight_2, ...
inline Integer kostka(const Partition& shape, std::span<const int> weight) {
    int total = 0;
    for (int w : weight) {
        if (w < 0) throw std::invalid_argument("negative weight entry");
        total += w;
    }
    if (total != shape.size()) return 0;
    const int len = shape.length();
    std::vector<int> cur(len, 0);
    auto rec = [&](auto& self, std::size_t step) -> Integer {
        if (step == weight.size()) return 1;
        Integer count = 0;
        std::vector<int> next = cur;
        // Choose new row lengths interlacing with cur, adding weight[step] cells.
        auto place = [&](auto& place_self, int row, int left) -> void {
            if (row == len) {
                if (left == 0) {
                    auto saved = cur;
                    cur = next;
                    count += self(self, step + 1);
                    cur = saved;
                }
                return;
            }
            const int cap = std::min(shape[row + 1], row == 0 ? shape[1] : cur[row - 1]);
            for (int add = 0; add <= std::min(left, cap - cur[row]); ++add) {
                next[row] = cur[row] + add;
                place_self(place_self, row + 1, left - add);
            }
            next[row] = cur[row];
        };
        place(place, 0, weight[step]);
        return count;
    };
    return rec(rec, 0);
}

inline Integer kostka(const Partition& shape, const Partition& weight) {
    return kostka(shape, std::span<const int>(weight.parts()));
}

}  // namespace qyt
