#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over a field.
 *
 * Coefficients are stored in ascending degree. The zero polynomial has no
 * coefficients; every other polynomial has a nonzero top coefficient.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sametype {

template <class F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<F> cs) : coeffs_(cs) { trim(); }
    explicit Polynomial(std::vector<F> cs) : coeffs_(std::move(cs)) { trim(); }

    static Polynomial constant(const F& c) { return Polynomial({c}); }
    /// a + b*s
    static Polynomial linear(const F& a, const F& b) { return Polynomial({a, b}); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<F>& coefficients() const { return coeffs_; }

    F operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0); }

    F leading() const { return is_zero() ? F(0) : coeffs_.back(); }

    /// Horner evaluation. T may differ from F (e.g. a real approximation).
    template <class T = F>
    T operator()(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    /// p(q(s)) by Horner's scheme over polynomials.
    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> out(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<F> out(a.coeffs_);
        for (auto& c : out) c = -c;
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const F& c, const Polynomial& p) { return constant(c) * p; }

    /// Euclidean division: returns {quotient, remainder}.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial{}, a};
        std::vector<F> rem(a.coeffs_);
        std::vector<F> quot(a.coeffs_.size() - b.coeffs_.size() + 1, F(0));
        const F lead = b.leading();
        for (std::size_t k = quot.size(); k-- > 0;) {
            const F c = rem[k + b.coeffs_.size() - 1] / lead;
            quot[k] = c;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= c * b.coeffs_[j];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        std::vector<F> out(coeffs_);
        const F lead = leading();
        for (auto& c : out) c /= lead;
        return Polynomial(std::move(out));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == F(0)) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

/// Monic gcd; gcd(0, 0) is the zero polynomial.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace sametype
