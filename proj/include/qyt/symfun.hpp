#pragma once

#include "partition.hpp"
#include "perm.hpp"
#include "qpoly.hpp"
#include "tableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qyt {

/// Exponent vector of a monomial x_1^{a_1} ... x_N^{a_N}.
using Exponent = std::vector<int>;

/// Homogeneous polynomial in N variables: exponent vector -> nonzero coefficient.
template <class Coeff>
class MonomialMap {
public:
    MonomialMap() = default;
    explicit MonomialMap(int vars) : vars_(vars) {}

    int vars() const { return vars_; }
    /// Total degree of every term; -1 while empty.
    int degree() const { return degree_; }
    const std::map<Exponent, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Coeff coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add(const Exponent& e, const Coeff& c) {
        if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("exponent length differs from variable count");
        int deg = 0;
        for (int a : e) {
            if (a < 0) throw std::invalid_argument("negative exponent");
            deg += a;
        }
        if (degree_ >= 0 && deg != degree_) throw std::invalid_argument("monomial map must stay homogeneous");
        if (is_zero_coeff(c)) return;
        degree_ = deg;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    MonomialMap& operator+=(const MonomialMap& o) {
        if (o.vars_ != vars_) throw std::invalid_argument("adding monomial maps over different variable counts");
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }

    friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    static bool is_zero_coeff(const Coeff& c) {
        if constexpr (requires { c.is_zero(); }) return c.is_zero();
        else return c == 0;
    }

    int vars_ = 0;
    int degree_ = -1;
    std::map<Exponent, Coeff> terms_;
};

/// Each integer coefficient replaced by coefficient * scale.
inline MonomialMap<QTPoly> scaled(const MonomialMap<Integer>& m, const QTPoly& scale) {
    MonomialMap<QTPoly> out(m.vars());
    if (scale.is_zero()) return out;
    for (const auto& [e, c] : m.terms()) out.add(e, QTPoly(c) * scale);
    return out;
}

inline std::string monomial_str(const Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(i + 1);
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

inline Exponent weight_exponent(const Tableau& t, int vars) {
    Exponent e(vars, 0);
    for (const auto& r : t.rows())
        for (int v : r) {
            if (v > vars) throw std::invalid_argument("tableau entry exceeds variable count");
            ++e[v - 1];
        }
    return e;
}

/// s_lambda(x_1..x_N) as the sum of x^{wt(T)} over SSYT with entries <= N.
inline MonomialMap<Integer> schur_truncated(const Partition& lambda, int vars) {
    MonomialMap<Integer> out(vars);
    for (const auto& t : enumerate_ssyt(lambda, vars)) out.add(weight_exponent(t, vars), 1);
    return out;
}

/// m_lambda(x_1..x_N): every distinct rearrangement of lambda padded by zeros.
inline MonomialMap<Integer> monomial_truncated(const Partition& lambda, int vars) {
    MonomialMap<Integer> out(vars);
    if (lambda.length() > vars) return out;
    Exponent e(vars, 0);
    for (int i = 0; i < lambda.length(); ++i) e[i] = lambda[i + 1];
    std::sort(e.begin(), e.end());
    do out.add(e, 1);
    while (std::next_permutation(e.begin(), e.end()));
    return out;
}

/// F_sigma(x_1..x_N) for sigma a subset of [n-1]: weakly increasing index
/// words i_1 <= ... <= i_n with a strict rise at each position of sigma.
inline MonomialMap<Integer> fundamental_truncated(const std::vector<int>& sigma, int n, int vars) {
    std::vector<bool> strict(n + 1, false);
    for (int d : sigma) {
        if (d < 1 || d >= n) throw std::invalid_argument("descent set entry outside [n-1]");
        strict[d] = true;
    }
    MonomialMap<Integer> out(vars);
    Exponent e(vars, 0);
    auto rec = [&](auto& self, int pos, int prev) -> void {
        if (pos > n) {
            out.add(e, 1);
            return;
        }
        const int lo = pos == 1 ? 1 : (strict[pos - 1] ? prev + 1 : prev);
        for (int v = lo; v <= vars; ++v) {
            ++e[v - 1];
            self(self, pos + 1, v);
            --e[v - 1];
        }
    };
    if (n == 0) out.add(e, 1);
    else rec(rec, 1, 0);
    return out;
}

/// A composition alpha of n as the subset {alpha_1, alpha_1 + alpha_2, ...} of [n-1].
inline std::vector<int> composition_to_set(const std::vector<int>& alpha) {
    std::vector<int> s;
    int sum = 0;
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
        sum += alpha[i];
        s.push_back(sum);
    }
    return s;
}

struct RskPair {
    Tableau insertion;  ///< P: row-insertion tableau, content = letters of the word
    Tableau recording;  ///< Q: standard, records where each step added a cell
};

/// Row insertion of w_1, w_2, ...: each letter bumps the leftmost entry
/// strictly greater than it in the row, the bumped entry moving up a row.
inline RskPair rsk_word(const Word& w) {
    std::vector<std::vector<int>> p, q;
    for (std::size_t step = 0; step < w.size(); ++step) {
        int x = w[step];
        std::size_t row = 0;
        while (true) {
            if (row == p.size()) {
                p.push_back({x});
                q.push_back({static_cast<int>(step + 1)});
                break;
            }
            auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
            if (it == p[row].end()) {
                p[row].push_back(x);
                q[row].push_back(static_cast<int>(step + 1));
                break;
            }
            std::swap(x, *it);
            ++row;
        }
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

inline RskPair rsk(const Perm& p) { return rsk_word(p.word()); }

/// Insertion tableau is an SSYT of weight lambda; recording tableau is an SYT
/// whose descent set equals Des(w).
inline RskPair rsk_multiset(const MultisetPerm& w) { return rsk_word(w.word()); }

/// sum over T in QYT(nu) of q^{maj(T)} t^{des(T)}.
inline QTPoly qyt_maj_des(const Partition& nu) {
    QTPoly s;
    for (const auto& syt : enumerate_syt(nu)) {
        auto d = descent_set(syt);
        int m = 0;
        for (int x : d) m += x;
        s.add_term(m, static_cast<int>(d.size()), 1);
    }
    return s;
}

/// sum over pi in S_lambda of q^{maj(pi)} t^{des(pi)}.
inline QTPoly multiset_maj_des(const Partition& lambda) {
    QTPoly s;
    for (const auto& w : iterate_multiset_perms(lambda)) s.add_term(w.maj(), w.des(), 1);
    return s;
}

/// Schur-basis expansion of a degree-n symmetric function with QTPoly coefficients.
class SchurExpansion {
public:
    SchurExpansion() = default;
    explicit SchurExpansion(int degree) : degree_(degree) {}

    int degree() const { return degree_; }

    void add(const Partition& lambda, const QTPoly& c) {
        if (lambda.size() != degree_) throw std::invalid_argument("Schur expansion key has the wrong size");
        auto& slot = coeffs_[lambda];
        slot += c;
        if (slot.is_zero()) coeffs_.erase(lambda);
    }

    QTPoly coeff(const Partition& lambda) const {
        auto it = coeffs_.find(lambda);
        return it == coeffs_.end() ? QTPoly() : it->second;
    }

    /// Nonzero terms in lexicographically decreasing partition order.
    std::vector<std::pair<Partition, QTPoly>> ordered() const {
        return {coeffs_.rbegin(), coeffs_.rend()};
    }

    /// The expansion evaluated in N variables, as a monomial map.
    MonomialMap<QTPoly> truncated(int vars) const {
        MonomialMap<QTPoly> out(vars);
        for (const auto& [lambda, c] : coeffs_) out += scaled(schur_truncated(lambda, vars), c);
        return out;
    }

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

private:
    int degree_ = 0;
    std::map<Partition, QTPoly> coeffs_;
};

/// Generating function over QYT. With q: sum_T q^{maj(T)} t^{des(T)} s_lambda.
/// Without q: sum_k QYT_{=k}(lambda) t^{k-1} s_lambda.
inline SchurExpansion gen_fn(int n, bool with_q) {
    SchurExpansion out(n);
    for (const auto& lambda : partitions_of(n)) {
        if (with_q) {
            out.add(lambda, qyt_maj_des(lambda));
        } else {
            auto counts = qyt_counts(lambda);
            QTPoly c;
            for (int k = 1; k <= n; ++k) c.add_term(0, k - 1, counts[k]);
            out.add(lambda, c);
        }
    }
    return out;
}

/// sum over pi in S_n of q^{maj(pi)} t^{des(pi)} F_{Des(pi^{-1})}(x_1..x_N).
inline MonomialMap<QTPoly> fundamental_side(int n, int vars) {
    MonomialMap<QTPoly> out(vars);
    std::map<std::vector<int>, QTPoly> grouped;
    for_each_perm(n, [&](const Word& w) {
        Perm p(w);
        grouped[p.inverse().descent_set()].add_term(p.maj(), p.des(), 1);
    });
    for (const auto& [sigma, c] : grouped) out += scaled(fundamental_truncated(sigma, n, vars), c);
    return out;
}

/// sum over lambda of (sum over S_lambda of q^maj t^des) m_lambda(x_1..x_N).
inline MonomialMap<QTPoly> monomial_side(int n, int vars) {
    MonomialMap<QTPoly> out(vars);
    for (const auto& lambda : partitions_of(n)) out += scaled(monomial_truncated(lambda, vars), multiset_maj_des(lambda));
    return out;
}

}  // namespace qyt
