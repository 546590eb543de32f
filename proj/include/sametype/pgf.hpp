#pragma once

/**
 * @file pgf.hpp
 * @brief Probability generating functions as exact rational functions.
 *
 * A RationalPGF is kept in a normal form: numerator and denominator share
 * no polynomial factor, their coefficients are coprime integers, and the
 * denominator's constant term is positive. Two PGFs are equal as functions
 * exactly when their normal forms coincide, so equality never samples.
 *
 * The thinning substitution s -> 1 - a + a s is the PGF image of binomial
 * thinning with retention probability a.
 */

#include "number.hpp"
#include "polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sametype {

using RationalPolynomial = Polynomial<Rational>;

/// Depth to which coefficient nonnegativity is checked on construction.
inline constexpr std::size_t default_check_prefix = 64;

/**
 * A positive scale. Thinning only makes sense for values in (0, 1]; the
 * endpoint 1 is admitted as the identity.
 */
class ScaleParam {
public:
    explicit ScaleParam(Rational value) : value_(std::move(value)) {
        if (value_ <= 0) throw domain_error("scale must be positive, got " + format_short(value_));
    }

    const Rational& value() const { return value_; }
    bool def21_admissible() const { return value_ <= 1; }

    friend bool operator==(const ScaleParam&, const ScaleParam&) = default;

private:
    Rational value_;
};

class RationalPGF;
std::vector<Rational> series_coefficients(const RationalPGF& q, std::size_t n);

class RationalPGF {
public:
    /**
     * Normalizes num/den and validates it as a PGF: finite at 0, equal to 1
     * at s = 1, and with nonnegative series coefficients through
     * `check_prefix` terms. Throws domain_error otherwise.
     */
    static RationalPGF make(RationalPolynomial num, RationalPolynomial den,
                            std::size_t check_prefix = default_check_prefix) {
        if (den.is_zero()) throw domain_error("PGF denominator is the zero polynomial");
        RationalPGF out;
        if (num.is_zero()) {
            out.num_ = {};
            out.den_ = RationalPolynomial{Rational(1)};
        } else {
            const auto g = gcd(num, den);
            out.num_ = divmod(num, g).first;
            out.den_ = divmod(den, g).first;
            out.normalize_content();
        }
        if (out.den_[0] == 0) throw domain_error("PGF has a pole at s = 0");
        if (out.num_(Rational(1)) != out.den_(Rational(1)))
            throw domain_error("PGF is not normalized: Q(1) != 1");
        const auto coeffs = series_coefficients(out, check_prefix == 0 ? 1 : check_prefix);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] < 0)
                throw domain_error("PGF coefficient of s^" + std::to_string(k) + " is negative");
        return out;
    }

    /// A finite-support PGF given its probabilities P(X=0), P(X=1), ...
    static RationalPGF from_pmf(std::vector<Rational> pmf) {
        return make(RationalPolynomial(std::move(pmf)), RationalPolynomial{Rational(1)});
    }

    const RationalPolynomial& numerator() const { return num_; }
    const RationalPolynomial& denominator() const { return den_; }

    /// Normal forms are unique, so this is equality of functions.
    friend bool operator==(const RationalPGF&, const RationalPGF&) = default;

private:
    RationalPGF() = default;

    void normalize_content() {
        Integer lcm_den = 1;
        for (const auto* p : {&num_, &den_})
            for (const auto& c : p->coefficients()) lcm_den = mp::lcm(lcm_den, mp::denominator(c));
        std::vector<Rational> n, d;
        Integer content = 0;
        for (const auto& c : num_.coefficients()) {
            n.push_back(c * lcm_den);
            content = mp::gcd(content, mp::numerator(n.back()));
        }
        for (const auto& c : den_.coefficients()) {
            d.push_back(c * lcm_den);
            content = mp::gcd(content, mp::numerator(d.back()));
        }
        Rational scale(1, content);
        if (d.front() < 0) scale = -scale;
        for (auto& c : n) c *= scale;
        for (auto& c : d) c *= scale;
        num_ = RationalPolynomial(std::move(n));
        den_ = RationalPolynomial(std::move(d));
    }

    RationalPolynomial num_;
    RationalPolynomial den_{Rational(1)};
};

/// Normal form of the geometric PGF (1-q)/(1-qs), q in (0,1).
inline RationalPGF make_geometric_pgf(const Rational& q) {
    if (q <= 0 || q >= 1) throw domain_error("geometric parameter must lie in (0,1), got " + format_short(q));
    return RationalPGF::make(RationalPolynomial{1 - q}, RationalPolynomial::linear(1, -q));
}

/**
 * Q(s) exactly. Any rational s is accepted; outside [0,1] this is the
 * analytic continuation and may hit a pole.
 */
inline Rational eval(const RationalPGF& q, const Rational& s) {
    const Rational den = q.denominator()(s);
    if (den == 0) throw pole_error("PGF denominator vanishes at s = " + format_short(s));
    return q.numerator()(s) / den;
}

inline Real eval_real(const RationalPGF& q, const Real& s) {
    return q.numerator().template operator()<Real>(s) / q.denominator().template operator()<Real>(s);
}

/// s -> Q(1 - a + a s) for a in (0,1].
inline RationalPGF thin(const RationalPGF& q, const ScaleParam& alpha) {
    if (!alpha.def21_admissible())
        throw domain_error("thinning needs alpha in (0,1], got " + format_short(alpha.value()));
    const auto inner = RationalPolynomial::linear(1 - alpha.value(), alpha.value());
    return RationalPGF::make(q.numerator().compose(inner), q.denominator().compose(inner));
}

/// P(X=0), ..., P(X=n-1) by exact power-series long division.
inline std::vector<Rational> series_coefficients(const RationalPGF& q, std::size_t n) {
    if (n == 0) throw domain_error("series_coefficients needs n >= 1");
    const auto& num = q.numerator();
    const auto& den = q.denominator();
    const auto den_terms = den.coefficients().size();
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = num[k];
        for (std::size_t j = 1; j < den_terms && j <= k; ++j) acc -= den[j] * out[k - j];
        out.push_back(acc / den[0]);
    }
    return out;
}

/// Exact identity num1*den2 == num2*den1.
inline bool pgf_equal(const RationalPGF& a, const RationalPGF& b) {
    return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

/// Ascending-degree rendering such as "4-s" or "8-6s+s^2".
inline std::string format_polynomial(const RationalPolynomial& p, char var = 's') {
    if (p.is_zero()) return "0";
    std::string out;
    int terms = 0;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        Rational c = p[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (terms > 0 || negative) out += negative ? "-" : "+";
        if (k == 0 || c != 1) out += format_short(c);
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
        ++terms;
    }
    return out;
}

/// "3/(4-s)", "(1+s)/2", "1" and so on.
inline std::string to_string(const RationalPGF& q) {
    auto wrap = [](const RationalPolynomial& p) {
        const auto body = format_polynomial(p);
        std::size_t nonzero = 0;
        for (const auto& c : p.coefficients()) nonzero += (c != 0);
        return nonzero > 1 ? "(" + body + ")" : body;
    };
    if (q.denominator() == RationalPolynomial{Rational(1)}) return format_polynomial(q.numerator());
    return wrap(q.numerator()) + "/" + wrap(q.denominator());
}

}  // namespace sametype
