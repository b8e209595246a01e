#pragma once

// Exhaustive verification suites. Each suite walks its cases in a fixed order
// and stops at the first failure, reporting the case with both sides evaluated.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "board.hpp"
#include "integer.hpp"
#include "io.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "pnk.hpp"
#include "qpoly.hpp"
#include "symfun.hpp"
#include "tableau.hpp"

namespace qyt {

/// Up/down signature of a permutation or SYT: position i is '+' unless i is a descent.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::string signs) : signs_(std::move(signs)) {
        for (char c : signs_)
            if (c != '+' && c != '-') throw std::invalid_argument("signature may only contain '+' and '-'");
    }

    /// Accepts the unicode minus as well as '-'.
    static Signature parse(std::string_view text) {
        std::string s;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text.substr(i, 3) == "\xE2\x88\x92") {
                s += '-';
                i += 2;
            } else {
                s += text[i];
            }
        }
        return Signature(std::move(s));
    }

    int length() const { return static_cast<int>(signs_.size()); }
    const std::string& str() const { return signs_; }
    int plus_count() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), '+')); }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::string signs_;
};

namespace detail {
inline Signature signature_from_descents(int n, const std::vector<int>& des) {
    std::string s(n > 0 ? n - 1 : 0, '+');
    for (int d : des) s[d - 1] = '-';
    return Signature(std::move(s));
}
}  // namespace detail

inline Signature signature_of(const Perm& p) { return detail::signature_from_descents(p.size(), p.descent_set()); }
inline Signature signature_of(const Tableau& syt) { return detail::signature_from_descents(syt.size(), descent_set(syt)); }

/// Row lengths of the ribbon R(sigma), top to bottom: each maximal run of '+'
/// (including empty runs at either end) gives a row one longer than the run.
inline std::vector<int> ribbon_rows(const Signature& s) {
    std::vector<int> rows{1};
    for (char c : s.str()) {
        if (c == '+') ++rows.back();
        else rows.push_back(1);
    }
    return rows;
}

/// Number of SYT of shape lambda whose signature has exactly k plus signs.
inline Integer foulkes_multiplicity(int n, int k, const Partition& lambda) {
    if (lambda.size() != n) throw std::invalid_argument("foulkes_multiplicity: lambda must be a partition of n");
    Integer c = 0;
    for (const auto& t : enumerate_syt(lambda))
        if (signature_of(t).plus_count() == k) ++c;
    return c;
}

/// Both sides of m^n = sum_k binom(m+k, n) sum_{|lambda|=n} QYT_{=n-k}(lambda) f^lambda.
inline std::pair<Integer, Integer> polya_dimension_sides(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("polya_dimension_check needs n >= 1, m >= 0");
    Integer rhs = 0;
    for (const auto& lambda : partitions_of(n)) {
        auto counts = qyt_counts(lambda);
        auto f = hook_length_count(lambda);
        for (int k = 0; k < n; ++k) rhs += binomial(m + k, n) * counts[n - k] * f;
    }
    return {ipow(Integer(m), static_cast<unsigned>(n)), rhs};
}

inline bool polya_dimension_check(int n, int m) {
    auto [lhs, rhs] = polya_dimension_sides(n, m);
    return lhs == rhs;
}

/// n! QYT_{=k+1}(lambda'), the coefficient table attached to the Jack expansion.
inline Integer jack_coefficient(const Partition& lambda, int k) {
    if (k < 0) throw std::invalid_argument("jack_coefficient needs k >= 0");
    const int n = lambda.size();
    if (k >= n) return 0;
    return factorial(n) * qyt_counts(lambda.conjugate())[k + 1];
}

namespace verify {

using io::Json;

struct Options {
    int max_n = 0;  // 0: the suite's default bound
    std::uint64_t seed = 0;
    int limit = kDefaultBruteForceLimit;
};

struct SuiteReport {
    std::string suite;
    Json bounds = Json::object();
    Json counterexample;  // null on pass
    std::int64_t ms = 0;

    bool passed() const { return counterexample.is_null(); }

    Json to_json() const {
        return Json{{"suite", suite},
                    {"bounds", bounds},
                    {"status", passed() ? "pass" : "fail"},
                    {"counterexample", counterexample},
                    {"ms", ms}};
    }
};

namespace detail {

inline QPoly q_hook_product(const Partition& lambda) {
    QPoly r = 1;
    for (int h : hooks(lambda)) r *= q_int(h);
    return r;
}

/// Per number of descents, the sum of q^{stat(T)} over SYT(lambda).
template <class Stat>
std::vector<QPoly> by_descents(const Partition& lambda, Stat stat) {
    std::vector<QPoly> out(lambda.size() + 1);
    for (const auto& t : enumerate_syt(lambda)) out[descent_set(t).size()].add_term(stat(t), 1);
    return out;
}

inline QPoly sum(const std::vector<QPoly>& v) {
    QPoly s;
    for (const auto& p : v) s += p;
    return s;
}

inline Integer at(const std::vector<Integer>& v, int i) {
    return i >= 0 && i < static_cast<int>(v.size()) ? v[i] : Integer(0);
}

inline Json sides(Json c, Json lhs, Json rhs) {
    c["lhs"] = std::move(lhs);
    c["rhs"] = std::move(rhs);
    return c;
}

/// First exponent where two monomial maps disagree, or null.
template <class C>
Json first_difference(const MonomialMap<C>& a, const MonomialMap<C>& b) {
    std::set<Exponent> keys;
    for (const auto& [e, c] : a.terms()) keys.insert(e);
    for (const auto& [e, c] : b.terms()) keys.insert(e);
    for (const auto& e : keys)
        if (!(a.coeff(e) == b.coeff(e))) return Json{{"monomial", monomial_str(e)}, {"lhs", io::to_json(a.coeff(e))}, {"rhs", io::to_json(b.coeff(e))}};
    return nullptr;
}

inline Integer pnk_paths_or_zero(int n, int k, std::span<const Integer> x) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 0 || k > n) return 0;
    return pnk_eval_paths(n, k, x);
}

// --- suites ---------------------------------------------------------------

inline Json hit(const Options& o, Json& bounds) {
    bounds = {{"max_n", o.max_n}};
    qyt::detail::check_limit(o.max_n, o.limit);
    for (const auto& lambda : partitions_up_to(o.max_n)) {
        const int n = lambda.size();
        auto counts = qyt_counts(lambda);
        auto hp = hook_product(lambda);
        auto h = hit_numbers(FerrersBoard::from_partition(lambda.conjugate()), o.limit);
        for (int k = 0; k <= n; ++k) {
            Integer lhs = at(counts, k + 1) * hp;
            if (lhs != h[k]) return sides({{"lambda", io::to_json(lambda)}, {"k", k}}, io::to_json(lhs), io::to_json(h[k]));
        }
    }
    return nullptr;
}

inline Json maj_hit(const Options& o, Json& bounds) {
    bounds = {{"max_n", o.max_n}};
    qyt::detail::check_limit(o.max_n, o.limit);
    for (const auto& lambda : partitions_up_to(o.max_n)) {
        const int n = lambda.size();
        const Json key = io::to_json(lambda);
        auto t = q_hit_numbers(FerrersBoard::from_partition(lambda).plus_one(), o.limit);
        auto maj = by_descents(lambda, [](const Tableau& s) { return tableau_maj(s); });
        auto hq = q_hook_product(lambda);
        const int nl = n_stat(lambda);
        for (int k = 0; k <= n; ++k) {
            QPoly lhs = maj[k] * hq, rhs = t[n - k].shift(nl);
            if (lhs != rhs) return sides({{"check", "maj-hit"}, {"lambda", key}, {"k", k}}, io::to_json(lhs), io::to_json(rhs));
        }
        if (sum(t) != q_fact(n))
            return sides({{"check", "mahonian"}, {"board", io::to_json(FerrersBoard::from_partition(lambda).plus_one())}}, io::to_json(sum(t)), io::to_json(q_fact(n)));
        QPoly lhs = sum(maj) * hq, rhs = q_fact(n).shift(nl);
        if (lhs != rhs) return sides({{"check", "q-hook-length"}, {"lambda", key}}, io::to_json(lhs), io::to_json(rhs));
    }
    return nullptr;
}

inline Json charge_hit(const Options& o, Json& bounds) {
    bounds = {{"max_n", o.max_n}};
    qyt::detail::check_limit(o.max_n, o.limit);
    for (const auto& lambda : partitions_up_to(o.max_n)) {
        const int n = lambda.size();
        const auto conj = lambda.conjugate();
        const auto board = FerrersBoard::from_partition(conj);
        auto t = q_hit_numbers(board, o.limit);
        auto ch = by_descents(lambda, [](const Tableau& s) { return charge(s); });
        auto hq = q_hook_product(lambda).shift(n * (n - 1) / 2);
        const int nc = n_stat(conj);
        for (int k = 0; k <= n; ++k) {
            QPoly lhs = ch[k] * hq, rhs = t[k].shift(n * k + nc);
            if (lhs != rhs) return sides({{"check", "charge-hit"}, {"lambda", io::to_json(lambda)}, {"k", k}}, io::to_json(lhs), io::to_json(rhs));
        }
        if (sum(t) != q_fact(n)) return sides({{"check", "mahonian"}, {"board", io::to_json(board)}}, io::to_json(sum(t)), io::to_json(q_fact(n)));
    }
    return nullptr;
}

inline Json summation(const Options& o, Json& bounds) {
    bounds = {{"max_n", o.max_n}};
    for (const auto& lambda : partitions_up_to(o.max_n)) {
        const int n = lambda.size();
        auto counts = qyt_counts(lambda);
        std::vector<Integer> ssyt(n + 2);
        for (int m = 1; m <= n + 1; ++m) ssyt[m] = hook_content_count(lambda, m);
        for (int k = 0; k <= n; ++k) {
            Integer rhs = 0;
            for (int m = 0; m <= k; ++m) rhs += ((k - m) % 2 ? -1 : 1) * binomial(n + 1, k - m) * ssyt[m + 1];
            Integer lhs = at(counts, k + 1);
            if (lhs != rhs) return sides({{"lambda", io::to_json(lambda)}, {"k", k}}, io::to_json(lhs), io::to_json(rhs));
        }
    }
    return nullptr;
}

/// Rows n = 3..6 of a(n,k,n-3), k = 0..n-1, as printed.
inline const std::vector<std::vector<int>>& printed_diagonal() {
    static const std::vector<std::vector<int>> rows{{1, 4, 1}, {1, 3, -3, -1}, {1, 2, -6, 2, 1}, {1, 1, -8, 8, -1, -1}};
    return rows;
}

inline Json lattice(const Options& o, Json& bounds) {
    constexpr int kRandomPoints = 200, kRandomMaxN = 6, kRowSumMaxN = 9, kEulerianMaxN = 8;
    const int sym_n = std::min(o.max_n, kRandomMaxN);
    bounds = {{"max_n", o.max_n},
              {"seed", o.seed},
              {"random_points", kRandomPoints},
              {"random_max_n", kRandomMaxN},
              {"row_sum_max_n", kRowSumMaxN},
              {"eulerian_max_n", kEulerianMaxN},
              {"multilinear_max_n", sym_n}};

    for (const auto& lambda : partitions_up_to(o.max_n)) {
        const int n = lambda.size();
        auto counts = qyt_counts(lambda);
        auto c = contents(lambda);
        for (int k = 0; k <= n; ++k) {
            Integer lhs = qyt_count_via_pnk(lambda, k), rhs = at(counts, k + 1);
            if (lhs != rhs) return sides({{"check", "lattice-theorem"}, {"lambda", io::to_json(lambda)}, {"k", k}}, io::to_json(lhs), io::to_json(rhs));
            Integer paths = pnk_eval_paths(n, k, std::span<const int>(c)), ebasis = pnk_eval_ebasis(n, k, std::span<const int>(c));
            if (paths != ebasis) return sides({{"check", "paths-vs-ebasis"}, {"lambda", io::to_json(lambda)}, {"k", k}}, io::to_json(paths), io::to_json(ebasis));
        }
    }

    const ACoeffTable table(kRowSumMaxN);
    for (int n = 1; n <= kEulerianMaxN; ++n) {
        std::vector<Integer> census(n + 1, 0);
        for_each_perm(n, [&](const Word& w) { ++census[des(w)]; });
        for (int k = 0; k <= n; ++k)
            if (table.at(n, k, 0) != census[k]) return sides({{"check", "eulerian"}, {"n", n}, {"k", k}}, io::to_json(table.at(n, k, 0)), io::to_json(census[k]));
    }
    for (int n = 1; n <= kRowSumMaxN; ++n)
        for (int m = 0; m <= n; ++m) {
            Integer s = 0;
            for (int k = 0; k <= n; ++k) s += table.at(n, k, m);
            Integer want = m == 0 ? factorial(n) : Integer(0);
            if (s != want) return sides({{"check", "row-sum"}, {"n", n}, {"m", m}}, io::to_json(s), io::to_json(want));
        }

    for (int n = 1; n <= sym_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& [mask, coeff] : pnk_multilinear(n, k)) {
                Integer want = table.at(n, k, std::popcount(mask));
                if (coeff != want) return sides({{"check", "multilinear-symmetry"}, {"n", n}, {"k", k}, {"mask", mask}}, io::to_json(coeff), io::to_json(want));
            }

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> pick_n(1, kRandomMaxN), value(-6, 6);
    for (int point = 0; point < kRandomPoints; ++point) {
        const int n = pick_n(rng);
        const int k = std::uniform_int_distribution<int>(0, n)(rng);
        std::vector<Integer> x(n);
        for (auto& v : x) v = value(rng);
        auto shuffled = x;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Json where{{"point", point}, {"n", n}, {"k", k}, {"x", io::to_json(x)}};

        Integer p = pnk_eval_paths(n, k, x);
        Integer ps = pnk_eval_paths(n, k, shuffled);
        if (p != ps) {
            where["check"] = "symmetry";
            where["permuted"] = io::to_json(shuffled);
            return sides(where, io::to_json(p), io::to_json(ps));
        }
        Integer e = pnk_eval_ebasis(n, k, std::span<const Integer>(x));
        if (p != e) {
            where["check"] = "paths-vs-ebasis";
            return sides(where, io::to_json(p), io::to_json(e));
        }
        std::span<const Integer> head(x.data(), n - 1);
        const Integer& xn = x.back();
        Integer rec = (xn + k + 1) * pnk_paths_or_zero(n - 1, k, head) + (n - k - xn) * pnk_paths_or_zero(n - 1, k - 1, head);
        if (p != rec) {
            where["check"] = "recursion";
            return sides(where, io::to_json(p), io::to_json(rec));
        }
    }

    const auto& printed = printed_diagonal();
    for (std::size_t r = 0; r < printed.size(); ++r) {
        const int n = static_cast<int>(r) + 3;
        std::vector<Integer> got, want(printed[r].begin(), printed[r].end());
        for (int k = 0; k < n; ++k) got.push_back(table.at(n, k, n - 3));
        if (got != want) return sides({{"check", "diagonal-table"}, {"n", n}}, io::to_json(got), io::to_json(want));
    }
    return nullptr;
}

/// P_{n,k} for n <= 3 exactly as printed, coefficients of e_0..e_n.
struct PrintedPnk {
    int n, k;
    std::vector<int> a;
};

inline const std::vector<PrintedPnk>& printed_pnk() {
    static const std::vector<PrintedPnk> rows{
        {1, 0, {1, 1}},       {1, 1, {0, 1}},          {2, 0, {1, 1, 1}},      {2, 1, {1, -1, -2}}, {2, 2, {0, 0, 1}},
        {3, 0, {1, 1, 1, 1}}, {3, 1, {4, 0, -2, -3}}, {3, 2, {1, -1, 1, 3}}, {3, 3, {0, 0, 0, 1}},
    };
    return rows;
}

inline Json printed(const Options&, Json& bounds) {
    bounds = {{"expansions", printed_pnk().size()}};
    Json first, others = Json::array();
    for (const auto& row : printed_pnk()) {
        auto got = a_coeffs(row.n, row.k).a;
        std::vector<Integer> want(row.a.begin(), row.a.end());
        if (got == want) continue;
        const std::string name = "P_{" + std::to_string(row.n) + "," + std::to_string(row.k) + "}";
        if (first.is_null()) first = sides({{"expansion", name}}, io::to_json(got), io::to_json(want));
        else others.push_back(name);
    }
    if (!first.is_null() && !others.empty()) first["also_failing"] = others;
    return first;
}

inline Json genfun(const Options& o, Json& bounds) {
    bounds = {{"max_n", o.max_n}, {"vars", "N = n (theorems); 1..n+1 (nonzero terms)"}};
    for (int n = 1; n <= o.max_n; ++n) {
        auto g = gen_fn(n, true);
        auto lhs = g.truncated(n);
        if (auto d = first_difference(lhs, fundamental_side(n, n)); !d.is_null()) {
            d["check"] = "fundamental";
            d["n"] = n;
            return d;
        }
        if (auto d = first_difference(lhs, monomial_side(n, n)); !d.is_null()) {
            d["check"] = "monomial";
            d["n"] = n;
            return d;
        }
        auto plain = gen_fn(n, false);
        for (const auto& lambda : partitions_of(n)) {
            QPoly a = plain.coeff(lambda).at_q_one(), b = g.coeff(lambda).at_q_one();
            if (a != b) return sides({{"check", "q=1 specialization"}, {"lambda", io::to_json(lambda)}}, io::to_json(a), io::to_json(b));
            // Coinvariant form at t = 1: maj summed over SYT, computed here from the QYT side.
            QPoly lusztig;
            for (const auto& t : enumerate_qyt(lambda)) lusztig.add_term(tableau_maj(t), 1);
            QPoly at_t = g.coeff(lambda).at_t_one();
            if (at_t != lusztig) return sides({{"check", "coinvariant"}, {"lambda", io::to_json(lambda)}}, io::to_json(at_t), io::to_json(lusztig));
        }
    }

    for (const auto& lambda : partitions_up_to(o.max_n)) {
        const int n = lambda.size();
        const Json key = io::to_json(lambda);
        // RSK on multiset permutations.
        std::set<std::pair<Tableau, Tableau>> images;
        auto words = iterate_multiset_perms(lambda);
        for (const auto& w : words) {
            auto r = rsk_multiset(w);
            bool ok = is_ssyt(r.insertion) && r.insertion.weight() == lambda.parts() && is_syt(r.recording) &&
                      r.recording.shape() == r.insertion.shape() && descent_set(r.recording) == w.descent_set();
            if (!ok) return Json{{"check", "rsk-multiset"}, {"lambda", key}, {"word", format_word(w.word())}, {"insertion", r.insertion.str()}, {"recording", r.recording.str()}};
            images.emplace(r.insertion, r.recording);
        }
        Integer pairs = 0;
        QTPoly lemma_rhs;
        for (const auto& nu : partitions_of(n)) {
            auto kk = kostka(nu, lambda);
            pairs += kk * hook_length_count(nu);
            lemma_rhs += QTPoly(kk) * qyt_maj_des(nu);
        }
        if (Integer(images.size()) != Integer(words.size()) || pairs != Integer(words.size()))
            return Json{{"check", "rsk-bijection"}, {"lambda", key}, {"words", words.size()}, {"distinct_images", images.size()}, {"pairs", io::to_json(pairs)}};
        auto lemma_lhs = multiset_maj_des(lambda);
        if (lemma_lhs != lemma_rhs) return sides({{"check", "lemma"}, {"lambda", key}}, io::to_json(lemma_lhs), io::to_json(lemma_rhs));

        // Gessel expansion restricted to the nonzero terms.
        auto syts = enumerate_syt(lambda);
        for (int vars = 1; vars <= n + 1; ++vars) {
            MonomialMap<Integer> total(vars);
            int nonzero = 0;
            for (const auto& t : syts) {
                auto f = fundamental_truncated(descent_set(t), n, vars);
                const bool expect = static_cast<int>(descent_set(t).size()) < vars;
                if (f.is_zero() == expect)
                    return Json{{"check", "nonzero-term"}, {"lambda", key}, {"vars", vars}, {"syt", t.str()}, {"expected_nonzero", expect}};
                nonzero += !f.is_zero();
                total += f;
            }
            if (auto d = first_difference(total, schur_truncated(lambda, vars)); !d.is_null()) {
                d["check"] = "gessel";
                d["lambda"] = key;
                d["vars"] = vars;
                return d;
            }
            auto qyt = static_cast<int>(enumerate_qyt_at_most(lambda, vars).size());
            if (nonzero != qyt) return sides({{"check", "nonzero-count"}, {"lambda", key}, {"vars", vars}}, nonzero, qyt);
        }

        // Schur into monomials: Kostka coefficients, unitriangular in dominance order.
        auto s = schur_truncated(lambda, n);
        for (const auto& mu : partitions_of(n)) {
            Exponent e(n, 0);
            for (int i = 0; i < mu.length(); ++i) e[i] = mu[i + 1];
            Integer got = s.coeff(e), want = kostka(lambda, mu);
            bool shape_ok = (mu == lambda) ? got == 1 : (dominates(lambda, mu) || got == 0);
            if (got != want || !shape_ok) return sides({{"check", "triangularity"}, {"lambda", key}, {"mu", io::to_json(mu)}}, io::to_json(got), io::to_json(want));
        }
    }
    return nullptr;
}

inline Json board(const Options& o, Json& bounds) {
    const int prop_n = o.max_n + 2;
    bounds = {{"max_n", o.max_n}, {"prop_max_n", prop_n}};
    qyt::detail::check_limit(o.max_n, o.limit);
    for (int n = 1; n <= o.max_n; ++n) {
        for (const auto& b : all_ferrers_boards(n)) {
            const Json key = io::to_json(b);
            auto t = q_hit_numbers(b, o.limit);
            auto h = hit_numbers(b, o.limit);
            for (int k = 0; k <= n; ++k)
                if (t[k].eval_at_one() != h[k]) return sides({{"check", "q=1 hits"}, {"board", key}, {"k", k}}, io::to_json(t[k].eval_at_one()), io::to_json(h[k]));
            if (sum(t) != q_fact(n)) return sides({{"check", "mahonian"}, {"board", key}}, io::to_json(sum(t)), io::to_json(q_fact(n)));
            for (int x = n; x <= 2 * n; ++x) {
                QPoly lhs = 1, rhs;
                for (int i = 1; i <= n; ++i) lhs *= q_int(x + b.height(i) - i + 1);
                for (int k = 0; k <= n; ++k) rhs += q_binom(x + k, n) * t[k];
                if (lhs != rhs) return sides({{"check", "gjw"}, {"board", key}, {"x", x}}, io::to_json(lhs), io::to_json(rhs));
            }
        }
    }
    for (const auto& lambda : partitions_up_to(prop_n)) {
        auto lhs = FerrersBoard::from_partition(lambda).plus_one().complement_rotated();
        auto rhs = FerrersBoard::from_partition(lambda.conjugate());
        if (lhs != rhs) return sides({{"check", "complement"}, {"lambda", io::to_json(lambda)}}, io::to_json(lhs), io::to_json(rhs));
        const int n = lambda.size();
        if (n > o.max_n) continue;
        auto a = hit_numbers(FerrersBoard::from_partition(lambda).plus_one(), o.limit), c = hit_numbers(rhs, o.limit);
        for (int k = 0; k <= n; ++k)
            if (a[k] != c[n - k]) return sides({{"check", "complement hits"}, {"lambda", io::to_json(lambda)}, {"k", k}}, io::to_json(a[k]), io::to_json(c[n - k]));
    }
    return nullptr;
}

inline Json applications(const Options& o, Json& bounds) {
    constexpr int kPolyaMaxM = 5;
    const int polya_n = std::min(o.max_n, 6);
    bounds = {{"max_n", o.max_n}, {"polya_max_n", polya_n}, {"polya_max_m", kPolyaMaxM}};
    for (const auto& lambda : partitions_up_to(o.max_n)) {
        const int n = lambda.size();
        auto counts = qyt_counts(lambda);
        for (int k = 0; k < n; ++k) {
            Integer f = foulkes_multiplicity(n, k, lambda);
            if (f != counts[n - k]) return sides({{"check", "foulkes"}, {"lambda", io::to_json(lambda)}, {"k", k}}, io::to_json(f), io::to_json(counts[n - k]));
        }
    }
    const auto rows = ribbon_rows(Signature("++-++-+-++-"));
    if (rows != std::vector<int>{3, 3, 2, 3, 1}) return sides({{"check", "ribbon"}, {"signature", "++-++-+-++-"}}, rows, std::vector<int>{3, 3, 2, 3, 1});
    for (int n = 1; n <= polya_n; ++n)
        for (int m = 0; m <= kPolyaMaxM; ++m) {
            auto [lhs, rhs] = polya_dimension_sides(n, m);
            if (lhs != rhs) return sides({{"check", "polya"}, {"n", n}, {"m", m}}, io::to_json(lhs), io::to_json(rhs));
        }
    std::vector<Integer> jack, want;
    for (int k = 0; k <= 4; ++k) jack.push_back(jack_coefficient({2, 2, 1}, k));
    for (int v : {0, 2, 3, 0, 0}) want.push_back(120 * v);
    if (jack != want) return sides({{"check", "jack"}, {"lambda", Json::array({2, 2, 1})}}, io::to_json(jack), io::to_json(want));
    return nullptr;
}

inline Json tableau(const Options& o, Json& bounds) {
    bounds = {{"max_n", o.max_n}};
    for (const auto& lambda : partitions_up_to(o.max_n)) {
        const int n = lambda.size();
        const Json key = io::to_json(lambda);
        Integer total = 0;
        for (const auto& syt : enumerate_syt(lambda)) {
            auto q = destandardize(syt);
            if (!is_qyt(q) || standardize(q) != syt)
                return Json{{"check", "destandardize"}, {"lambda", key}, {"syt", syt.str()}, {"qyt", q.str()}};
        }
        for (int m = 1; m <= n; ++m) {
            auto got = enumerate_qyt_exact(lambda, m);
            std::vector<Tableau> want;
            for (auto& t : enumerate_ssyt(lambda, m))
                if (t.max_entry() == m && is_qyt(t)) want.push_back(std::move(t));
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want) return sides({{"check", "qyt-census"}, {"lambda", key}, {"m", m}}, got.size(), want.size());
            total += got.size();
        }
        if (total != hook_length_count(lambda)) return sides({{"check", "qyt-total"}, {"lambda", key}}, io::to_json(total), io::to_json(hook_length_count(lambda)));
    }
    return nullptr;
}

}  // namespace detail

struct SuiteInfo {
    std::string name;
    int default_max_n;
    std::string summary;
    std::function<Json(const Options&, Json&)> run;
};

inline const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> all{
        {"hit", 7, "QYT count times hook product equals hit numbers of the conjugate board", detail::hit},
        {"maj-hit", 6, "maj generating function against q-hit numbers of B x 1", detail::maj_hit},
        {"charge-hit", 6, "charge generating function against q-hit numbers of the conjugate board", detail::charge_hit},
        {"summation", 7, "QYT counts as alternating sums of SSYT counts", detail::summation},
        {"lattice", 7, "P_{n,k} lattice paths, e-basis coefficients and their tables", detail::lattice},
        {"printed-pnk", 3, "P_{n,k} expansions for n <= 3 compared with the printed list", detail::printed},
        {"genfun", 5, "QYT generating functions in the fundamental and monomial bases", detail::genfun},
        {"board", 6, "Ferrers board identities: q = 1 hits, Mahonian sum, GJW, complement", detail::board},
        {"applications", 7, "Foulkes multiplicities, ribbons, Polya dimensions, Jack table", detail::applications},
        {"tableau", 6, "destandardization bijection and direct QYT census", detail::tableau},
    };
    return all;
}

inline const SuiteInfo& find_suite(std::string_view name) {
    for (const auto& s : suites())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

inline SuiteReport run_suite(std::string_view name, Options o = {}) {
    const auto& info = find_suite(name);
    if (o.max_n <= 0) o.max_n = info.default_max_n;
    SuiteReport r;
    r.suite = info.name;
    const auto start = std::chrono::steady_clock::now();
    r.counterexample = info.run(o, r.bounds);
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Every suite in registry order; a nonzero max_n overrides every default.
inline std::vector<SuiteReport> run_all(const Options& o = {}) {
    std::vector<SuiteReport> out;
    for (const auto& s : suites()) out.push_back(run_suite(s.name, o));
    return out;
}

}  // namespace verify
}  // namespace qyt
