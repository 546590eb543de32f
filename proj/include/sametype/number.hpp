#pragma once

/**
 * @file number.hpp
 * @brief Exact rationals, high-precision reals and the values that mix them.
 *
 * Everything in the library computes over arbitrary-precision rationals.
 * Real numbers only appear when a power q^t has no rational value, and
 * such results are carried in a Value alongside a flag saying so.
 */

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sametype {

namespace mp = boost::multiprecision;

using Integer = mp::cpp_int;
using Rational = mp::cpp_rational;
using Real = mp::cpp_bin_float_50;

/// Relative tolerance for every comparison that touches the float path.
inline const Real float_tolerance{"1e-12"};

// Error taxonomy. All derive from the matching std:: exception.

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct insufficient_prefix_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_provenance_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Real to_real(const Rational& r) {
    return Real(mp::numerator(r)) / Real(mp::denominator(r));
}

/// Renders r as "num/den", including "n/1" for integers.
inline std::string format_rational(const Rational& r) {
    return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

/// Renders r as "n" when integral, "num/den" otherwise.
inline std::string format_short(const Rational& r) {
    if (mp::denominator(r) == 1) return mp::numerator(r).str();
    return format_rational(r);
}

/**
 * Parses "a" or "a/b" with optional leading sign on a. Decimal points,
 * exponents and whitespace are rejected so that no literal silently loses
 * precision.
 */
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view digits, bool allow_sign) -> Integer {
        std::size_t start = 0;
        if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) start = 1;
        if (start == digits.size()) throw parse_error("malformed rational literal '" + std::string(text) + "'");
        for (std::size_t i = start; i < digits.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
                if (digits[i] == '.' || digits[i] == 'e' || digits[i] == 'E')
                    throw parse_error("decimal literal '" + std::string(text) + "' rejected; write it as a/b");
                throw parse_error("malformed rational literal '" + std::string(text) + "'");
            }
        }
        Integer v(std::string(digits.substr(start)));
        return (start == 1 && digits[0] == '-') ? Integer(-v) : v;
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    const Integer num = parse_int(text.substr(0, slash), true);
    const Integer den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

/// Exact k-th root of a nonnegative integer, if one exists.
inline std::optional<Integer> integer_root(const Integer& n, unsigned k) {
    if (n < 0 || k == 0) return std::nullopt;
    if (k == 1 || n < 2) return n;
    const unsigned bits = static_cast<unsigned>(mp::msb(n)) + 1;
    Integer lo = 1;
    Integer hi = Integer(1) << (bits / k + 1);
    while (lo <= hi) {
        const Integer mid = (lo + hi) >> 1;
        const Integer p = mp::pow(mid, k);
        if (p == n) return mid;
        if (p < n)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

/**
 * q^e for q > 0 and rational e >= 0, when the result is rational.
 *
 * With q = n/d in lowest terms and e = a/b, q^e is rational iff n and d are
 * both perfect b-th powers.
 */
inline std::optional<Rational> exact_power(const Rational& q, const Rational& e) {
    if (q <= 0 || e < 0) return std::nullopt;
    if (e == 0) return Rational(1);
    const Integer& a = mp::numerator(e);
    const Integer& b = mp::denominator(e);
    // Exponents this large never occur for the horizons used here.
    if (a > 1'000'000 || b > 1'000'000) return std::nullopt;
    const auto root_b = b.convert_to<unsigned>();
    const auto num_root = integer_root(mp::numerator(q), root_b);
    if (!num_root) return std::nullopt;
    const auto den_root = integer_root(mp::denominator(q), root_b);
    if (!den_root) return std::nullopt;
    const auto power = a.convert_to<unsigned>();
    return Rational(mp::pow(*num_root, power), mp::pow(*den_root, power));
}

inline Real real_power(const Rational& q, const Real& e) {
    if (e == 0) return Real(1);
    return mp::exp(e * mp::log(to_real(q)));
}

inline bool approx_equal(const Real& a, const Real& b, const Real& rel = float_tolerance) {
    const Real scale = std::max<Real>(mp::abs(a), mp::abs(b));
    if (scale == 0) return true;
    return mp::abs(a - b) <= rel * scale;
}

/**
 * Best rational approximation of x with denominator at most max_den
 * (continued-fraction convergents plus the final semiconvergent).
 */
inline Rational rationalize(const Real& x, const Integer& max_den) {
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Real frac = x;
    for (int iter = 0; iter < 128; ++iter) {
        const Real fl = mp::floor(frac);
        const Integer a = fl.convert_to<Integer>();
        const Integer q2 = a * q1 + q0;
        if (q2 > max_den) {
            const Integer t = (max_den - q0) / q1;
            const Rational semi(t * p1 + p0, t * q1 + q0);
            const Rational conv(p1, q1);
            return mp::abs(to_real(semi) - x) < mp::abs(to_real(conv) - x) ? semi : conv;
        }
        const Integer p2 = a * p1 + p0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const Real rem = frac - fl;
        if (rem == 0 || mp::abs(to_real(Rational(p1, q1)) - x) == 0) break;
        frac = 1 / rem;
    }
    return Rational(p1, q1);
}

/**
 * A real number that is exact when it can be.
 *
 * `approx` is always populated; `exact` is present only when the value is a
 * known rational.
 */
struct Value {
    std::optional<Rational> exact;
    Real approx;

    static Value of(const Rational& r) { return Value{r, to_real(r)}; }
    static Value inexact(const Real& x) { return Value{std::nullopt, x}; }

    bool is_exact() const { return exact.has_value(); }

    friend Value operator+(const Value& a, const Value& b) {
        if (a.exact && b.exact) return of(*a.exact + *b.exact);
        return inexact(a.approx + b.approx);
    }
    friend Value operator-(const Value& a, const Value& b) {
        if (a.exact && b.exact) return of(*a.exact - *b.exact);
        return inexact(a.approx - b.approx);
    }
    friend Value operator*(const Value& a, const Value& b) {
        if (a.exact && b.exact) return of(*a.exact * *b.exact);
        return inexact(a.approx * b.approx);
    }
};

/// Exact comparison when both sides are exact; relative 1e-12 otherwise.
inline bool same_value(const Value& a, const Value& b) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    return approx_equal(a.approx, b.approx);
}

inline std::string format_real(const Real& x, int digits = 17) {
    return x.str(digits, std::ios_base::fmtflags(0));
}

}  // namespace sametype
