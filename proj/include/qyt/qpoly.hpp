#pragma once

#include "integer.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qyt {

/// Polynomial in q with arbitrary-precision integer coefficients, dense by degree.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    QPoly(Integer constant) {  // NOLINT: implicit lift of scalars
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    QPoly(int constant) : QPoly(Integer(constant)) {}  // NOLINT
    explicit QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly monomial(int degree, Integer coeff = 1) {
        if (degree < 0) throw std::invalid_argument("negative q-degree");
        std::vector<Integer> c(degree + 1, 0);
        c[degree] = std::move(coeff);
        return QPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    Integer operator[](int d) const {
        return d >= 0 && d <= degree() ? coeffs_[d] : Integer(0);
    }

    /// Adds c * q^d in place.
    void add_term(int d, const Integer& c) {
        if (d < 0) throw std::invalid_argument("negative q-degree");
        if (static_cast<int>(coeffs_.size()) <= d) coeffs_.resize(d + 1, 0);
        coeffs_[d] += c;
        trim();
    }

    Integer eval_at_one() const {
        Integer s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    Integer eval(const Integer& q) const {
        Integer r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
        return r;
    }

    /// Multiply by q^d.
    QPoly shift(int d) const {
        if (is_zero()) return {};
        if (d < 0) throw std::invalid_argument("negative shift");
        std::vector<Integer> c(d, 0);
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return QPoly(std::move(c));
    }

    QPoly& operator+=(const QPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(QPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return QPoly(std::move(c));
    }
    friend QPoly scalar_mul(const Integer& s, QPoly p) {
        if (s == 0) return {};
        for (auto& c : p.coeffs_) c *= s;
        return p;
    }

    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// Human-readable form, ascending degree: "1 + 2q + q^3".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = 0; d <= degree(); ++d) {
            const Integer& c = coeffs_[d];
            if (c == 0) continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) os << (c < 0 ? "-" : "");
            else os << (c < 0 ? " - " : " + ");
            first = false;
            if (d == 0) os << mag;
            else {
                if (mag != 1) os << mag;
                os << 'q';
                if (d > 1) os << '^' << d;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

/// Exact division a / b in Z[q]; throws inexact_error if b does not divide a.
inline QPoly exact_div(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw inexact_error("QPoly division by zero");
    if (a.is_zero()) return {};
    std::vector<Integer> rem = a.coeffs();
    const int db = b.degree();
    const Integer& lead = b.coeffs().back();
    if (a.degree() < db) throw inexact_error("QPoly division leaves a remainder");
    std::vector<Integer> quot(a.degree() - db + 1, 0);
    for (int d = a.degree(); d >= db; --d) {
        if (rem[d] == 0) continue;
        Integer qc = qyt::exact_div(rem[d], lead);
        quot[d - db] = qc;
        for (int j = 0; j <= db; ++j) rem[d - db + j] -= qc * b.coeffs()[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw inexact_error("QPoly division leaves a remainder");
    return QPoly(std::move(quot));
}

/// [k] = 1 + q + ... + q^{k-1}; [0] = 0. Negative k is rejected.
inline QPoly q_int(int k) {
    if (k < 0) throw std::invalid_argument("q_int of negative integer");
    return QPoly(std::vector<Integer>(k, 1));
}

inline QPoly q_fact(int k) {
    if (k < 0) throw std::invalid_argument("q_fact of negative integer");
    QPoly r = 1;
    for (int i = 2; i <= k; ++i) r *= q_int(i);
    return r;
}

/// Gaussian binomial [a choose b]; zero when b < 0 or b > a.
inline QPoly q_binom(int a, int b) {
    if (b < 0 || a < 0 || b > a) return {};
    return exact_div(q_fact(a), q_fact(b) * q_fact(a - b));
}

/// Sparse polynomial in q and t: (q-degree, t-degree) -> nonzero coefficient.
class QTPoly {
public:
    using Key = std::pair<int, int>;

    QTPoly() = default;
    QTPoly(Integer c) {  // NOLINT
        if (c != 0) terms_[{0, 0}] = std::move(c);
    }
    QTPoly(int c) : QTPoly(Integer(c)) {}  // NOLINT

    static QTPoly monomial(int qdeg, int tdeg, Integer c = 1) {
        QTPoly p;
        p.add_term(qdeg, tdeg, c);
        return p;
    }

    void add_term(int qdeg, int tdeg, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({qdeg, tdeg}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Integer>& terms() const { return terms_; }

    Integer coeff(int qdeg, int tdeg) const {
        auto it = terms_.find({qdeg, tdeg});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// q -> 1, leaving a polynomial in t (returned as a QPoly in the variable t).
    QPoly at_q_one() const {
        QPoly r;
        for (const auto& [k, c] : terms_) r.add_term(k.second, c);
        return r;
    }
    /// t -> 1, leaving a polynomial in q.
    QPoly at_t_one() const {
        QPoly r;
        for (const auto& [k, c] : terms_) r.add_term(k.first, c);
        return r;
    }

    QTPoly& operator+=(const QTPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    QTPoly& operator-=(const QTPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b) {
        QTPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    QTPoly& operator*=(const QTPoly& o) { return *this = *this * o; }

    friend bool operator==(const QTPoly&, const QTPoly&) = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) os << (c < 0 ? "-" : "");
            else os << (c < 0 ? " - " : " + ");
            first = false;
            const bool bare = k.first == 0 && k.second == 0;
            if (mag != 1 || bare) os << mag;
            if (k.first > 0) os << 'q' << (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second > 0) os << 't' << (k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        return os.str();
    }

private:
    std::map<Key, Integer> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const QTPoly& p) { return os << p.str(); }

}  // namespace qyt
