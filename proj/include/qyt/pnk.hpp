#pragma once

#include "partition.hpp"
#include "perm.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qyt {

enum class Step : char { North = 'N', East = 'E' };

/// Linear factor coeff * x_i + constant attached to step i of a path.
struct StepFactor {
    int x_coeff = 0;
    int constant = 0;
    friend bool operator==(const StepFactor&, const StepFactor&) = default;
};

/// A lattice path from (0,0) to (k, n-k) using unit North and East steps.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    /// "ENNEE".
    static LatticePath parse(std::string_view text) {
        std::vector<Step> steps;
        for (char c : text) {
            if (c == 'N') steps.push_back(Step::North);
            else if (c == 'E') steps.push_back(Step::East);
            else throw std::invalid_argument(std::string("lattice path step must be N or E, got ") + c);
        }
        return LatticePath(std::move(steps));
    }

    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<Step>& steps() const { return steps_; }

    int east_count() const {
        int k = 0;
        for (auto s : steps_) k += s == Step::East ? 1 : 0;
        return k;
    }

    /// E_i: east steps among the first i steps (step i included), 1-based.
    int east_through(int i) const {
        int k = 0;
        for (int s = 0; s < i; ++s) k += steps_[s] == Step::East ? 1 : 0;
        return k;
    }
    int north_through(int i) const { return i - east_through(i); }

    /// Step i weighs x_i + E_i + 1 when North and N_i - x_i when East.
    std::vector<StepFactor> factors() const {
        std::vector<StepFactor> out;
        int east = 0;
        for (int i = 1; i <= length(); ++i) {
            if (steps_[i - 1] == Step::East) {
                ++east;
                out.push_back({-1, i - east});
            } else {
                out.push_back({1, east + 1});
            }
        }
        return out;
    }

    std::string str() const {
        std::string s;
        for (auto st : steps_) s.push_back(static_cast<char>(st));
        return s;
    }

private:
    std::vector<Step> steps_;
};

/// Product of step weights at the point x (|x| = path length).
inline Integer path_weight(const LatticePath& p, std::span<const Integer> x) {
    if (static_cast<int>(x.size()) != p.length()) throw std::invalid_argument("path_weight: wrong number of variables");
    Integer w = 1;
    auto fs = p.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) w *= fs[i].x_coeff * x[i] + fs[i].constant;
    return w;
}

/// All C(n, k) paths with n steps and k East steps, lexicographic in the step word (E < N).
inline std::vector<LatticePath> lattice_paths(int n, int k) {
    std::vector<LatticePath> out;
    if (k < 0 || k > n) return out;
    std::vector<Step> steps;
    auto rec = [&](auto& self, int east_left, int north_left) -> void {
        if (east_left == 0 && north_left == 0) {
            out.emplace_back(steps);
            return;
        }
        if (east_left > 0) {
            steps.push_back(Step::East);
            self(self, east_left - 1, north_left);
            steps.pop_back();
        }
        if (north_left > 0) {
            steps.push_back(Step::North);
            self(self, east_left, north_left - 1);
            steps.pop_back();
        }
    };
    rec(rec, k, n - k);
    return out;
}

/// P_{n,k}(x) as the sum of path weights.
inline Integer pnk_eval_paths(int n, int k, std::span<const Integer> x) {
    Integer s = 0;
    for (const auto& p : lattice_paths(n, k)) s += path_weight(p, x);
    return s;
}

inline Integer pnk_eval_paths(int n, int k, std::span<const int> x) {
    std::vector<Integer> xi(x.begin(), x.end());
    return pnk_eval_paths(n, k, std::span<const Integer>(xi));
}

/// P_{n,k} expanded exactly. Each x_i occurs in one factor only, so the
/// polynomial is multilinear; the key is the bitmask of variables in a monomial.
inline std::map<std::uint32_t, Integer> pnk_multilinear(int n, int k) {
    if (n > 30) throw std::invalid_argument("pnk_multilinear supports n <= 30");
    std::map<std::uint32_t, Integer> total;
    for (const auto& p : lattice_paths(n, k)) {
        std::map<std::uint32_t, Integer> prod{{0u, 1}};
        auto fs = p.factors();
        for (int i = 0; i < n; ++i) {
            std::map<std::uint32_t, Integer> next;
            for (const auto& [mask, c] : prod) {
                if (fs[i].constant != 0) next[mask] += c * fs[i].constant;
                next[mask | (1u << i)] += c * fs[i].x_coeff;
            }
            prod = std::move(next);
        }
        for (const auto& [mask, c] : prod) total[mask] += c;
    }
    std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
    return total;
}

/// e_m(x) for m = 0..|x| by the standard product-of-distinct-entries DP.
inline std::vector<Integer> elementary_symmetric(std::span<const Integer> x) {
    std::vector<Integer> e(x.size() + 1, 0);
    e[0] = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t m = i + 1; m >= 1; --m) e[m] += e[m - 1] * x[i];
    return e;
}

inline std::vector<Integer> elementary_symmetric(std::span<const int> x) {
    std::vector<Integer> xi(x.begin(), x.end());
    return elementary_symmetric(std::span<const Integer>(xi));
}

/// Coefficients a(n,k,m) of P_{n,k} in the elementary basis, for all n up to
/// a bound. a(n,k,0) = A(n,k); a(n,k,m) = a(n-1,k,m-1) - a(n-1,k-1,m-1) for
/// m >= 1; base P_{1,0} = e_1 + 1, P_{1,1} = -e_1.
class ACoeffTable {
public:
    explicit ACoeffTable(int max_n) : max_n_(max_n) {
        if (max_n < 1) throw std::invalid_argument("a-coefficient table needs max_n >= 1");
        table_.resize(max_n + 1);
        table_[1] = {{1, 1}, {0, -1}};
        for (int n = 2; n <= max_n; ++n) {
            table_[n].assign(n + 1, std::vector<Integer>(n + 1, 0));
            for (int k = 0; k <= n; ++k) {
                table_[n][k][0] = eulerian(n, k);
                for (int m = 1; m <= n; ++m) table_[n][k][m] = at(n - 1, k, m - 1) - at(n - 1, k - 1, m - 1);
            }
        }
    }

    int max_n() const { return max_n_; }

    /// a(n,k,m); zero outside 0 <= k, m <= n.
    Integer at(int n, int k, int m) const {
        if (n < 1 || n > max_n_) throw std::out_of_range("a-coefficient table queried beyond its bound");
        if (k < 0 || k > n || m < 0 || m > n) return 0;
        return table_[n][k][m];
    }

    /// Coefficient vector (m = 0..n) of P_{n,k}.
    std::vector<Integer> row(int n, int k) const {
        std::vector<Integer> r(n + 1);
        for (int m = 0; m <= n; ++m) r[m] = at(n, k, m);
        return r;
    }

private:
    int max_n_;
    std::vector<std::vector<std::vector<Integer>>> table_;
};

/// P_{n,k} in the e-basis.
struct PnkPoly {
    int n = 0;
    int k = 0;
    std::vector<Integer> a;  // a[m], m = 0..n
    friend bool operator==(const PnkPoly&, const PnkPoly&) = default;
};

inline PnkPoly a_coeffs(int n, int k) {
    if (n < 1) throw std::invalid_argument("a_coeffs needs n >= 1");
    return {n, k, ACoeffTable(n).row(n, k)};
}

/// sum_m a(n,k,m) e_m(x).
inline Integer pnk_eval_ebasis(const PnkPoly& p, std::span<const Integer> x) {
    if (static_cast<int>(x.size()) != p.n) throw std::invalid_argument("pnk_eval_ebasis: wrong number of variables");
    auto e = elementary_symmetric(x);
    Integer s = 0;
    for (int m = 0; m <= p.n; ++m) s += p.a[m] * e[m];
    return s;
}

inline Integer pnk_eval_ebasis(int n, int k, std::span<const Integer> x) { return pnk_eval_ebasis(a_coeffs(n, k), x); }

inline Integer pnk_eval_ebasis(int n, int k, std::span<const int> x) {
    std::vector<Integer> xi(x.begin(), x.end());
    return pnk_eval_ebasis(n, k, std::span<const Integer>(xi));
}

/// QYT_{=k+1}(lambda) = P_{n,k}(contents) / prod h(u).
inline Integer qyt_count_via_pnk(const Partition& lambda, int k) {
    const int n = lambda.size();
    if (n == 0) throw std::invalid_argument("qyt_count_via_pnk needs a nonempty partition");
    if (k < 0 || k > n) throw std::invalid_argument("qyt_count_via_pnk needs 0 <= k <= n");
    auto c = contents(lambda);
    return exact_div(pnk_eval_ebasis(n, k, std::span<const int>(c)), hook_product(lambda));
}

}  // namespace qyt
