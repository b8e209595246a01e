#pragma once

#include "integer.hpp"
#include "partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qyt {

/// Word over positive integers. Positions are 1-based in every statistic.
using Word = std::vector<int>;

/// Descent positions i (1-based) with w_i > w_{i+1}.
inline std::vector<int> descent_set(std::span<const int> w) {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i + 1));
    return d;
}

inline int des(std::span<const int> w) { return static_cast<int>(descent_set(w).size()); }

inline int maj(std::span<const int> w) {
    auto d = descent_set(w);
    return std::accumulate(d.begin(), d.end(), 0);
}

/// Permutation of {1..n} in one-line notation.
class Perm {
public:
    Perm() = default;

    explicit Perm(Word word) : word_(std::move(word)) {
        std::vector<bool> seen(word_.size() + 1, false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[v]) {
                throw std::invalid_argument("not a permutation of 1..n");
            }
            seen[v] = true;
        }
    }

    Perm(std::initializer_list<int> w) : Perm(Word(w)) {}

    static Perm identity(int n) {
        Word w(n);
        std::iota(w.begin(), w.end(), 1);
        return Perm(std::move(w));
    }

    int size() const { return static_cast<int>(word_.size()); }
    const Word& word() const { return word_; }
    /// pi(i), 1-based.
    int operator()(int i) const { return word_[i - 1]; }

    Perm inverse() const {
        Word inv(word_.size());
        for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i + 1);
        return Perm(std::move(inv));
    }

    /// (this o other)(i) = this(other(i)).
    Perm compose(const Perm& other) const {
        if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
        Word w(word_.size());
        for (int i = 1; i <= size(); ++i) w[i - 1] = (*this)(other(i));
        return Perm(std::move(w));
    }

    std::vector<int> descent_set() const { return qyt::descent_set(word_); }
    int des() const { return qyt::des(word_); }
    int maj() const { return qyt::maj(word_); }

    int cycle_count() const {
        std::vector<bool> seen(word_.size(), false);
        int cycles = 0;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (std::size_t j = i; !seen[j]; j = word_[j] - 1) seen[j] = true;
        }
        return cycles;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    Word word_;
};

/// Word with content vector lambda: value i occurs lambda_i times.
class MultisetPerm {
public:
    MultisetPerm() = default;
    explicit MultisetPerm(Word word) : word_(std::move(word)) {
        for (int v : word_)
            if (v < 1) throw std::invalid_argument("multiset permutation entries must be positive");
    }
    MultisetPerm(std::initializer_list<int> w) : MultisetPerm(Word(w)) {}

    const Word& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }

    /// Multiplicities of 1, 2, ..., max entry (may contain zeros for gappy words).
    std::vector<int> content() const {
        int mx = word_.empty() ? 0 : *std::max_element(word_.begin(), word_.end());
        std::vector<int> c(mx, 0);
        for (int v : word_) ++c[v - 1];
        return c;
    }

    std::vector<int> descent_set() const { return qyt::descent_set(word_); }
    int des() const { return qyt::des(word_); }
    int maj() const { return qyt::maj(word_); }

    friend bool operator==(const MultisetPerm&, const MultisetPerm&) = default;

private:
    Word word_;
};

/// Digits for n <= 9 (e.g. "45312"), comma-separated otherwise.
inline std::string format_word(std::span<const int> w) {
    const bool digits = w.size() <= 9 && std::all_of(w.begin(), w.end(), [](int v) { return v >= 0 && v <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

inline std::string format_perm(const Perm& p) { return format_word(p.word()); }

/// Accepts both forms produced by format_word.
inline Word parse_word(std::string_view text) {
    Word w;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument(std::string("bad character in word: ") + c);
            w.push_back(c - '0');
        }
        return w;
    }
    std::string token;
    auto flush = [&] {
        if (token.empty()) throw std::invalid_argument("empty entry in word");
        std::size_t used = 0;
        w.push_back(std::stoi(token, &used));
        if (used != token.size()) throw std::invalid_argument("bad entry in word: " + token);
        token.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else if (c != ' ') token.push_back(c);
    }
    flush();
    return w;
}

inline Perm parse_perm(std::string_view text) { return Perm(parse_word(text)); }

/// All of S_n in lexicographic order.
inline std::vector<Perm> iterate_perms(int n) {
    std::vector<Perm> out;
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Calls f(word) for every permutation of {1..n} in lexicographic order,
/// without materializing the list.
template <class F>
void for_each_perm(int n, F&& f) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do f(std::as_const(w));
    while (std::next_permutation(w.begin(), w.end()));
}

/// All words with content lambda (value i appears lambda_i times), lexicographic.
inline std::vector<MultisetPerm> iterate_multiset_perms(const Partition& lambda) {
    Word w;
    for (int i = 1; i <= lambda.length(); ++i) w.insert(w.end(), lambda[i], i);
    std::vector<MultisetPerm> out;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Eulerian number A(n, k), by the recurrence A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1).
inline Integer eulerian(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    if (k >= n) return 0;
    std::vector<Integer> row{1};  // n = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<Integer> next(m, 0);
        for (int j = 0; j < m; ++j) {
            if (j < static_cast<int>(row.size())) next[j] += Integer(j + 1) * row[j];
            if (j >= 1) next[j] += Integer(m - j) * row[j - 1];
        }
        row = std::move(next);
    }
    return row[k];
}

}  // namespace qyt
