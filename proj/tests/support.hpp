#pragma once

// Random instance generators and independent oracles shared by the unit,
// property and acceptance suites. Oracles here never call the code path
// they check: thinning is checked by point evaluation, pmfs by closed forms
// and brute-force sums, powers by long double std::pow.

#include <sametype/sametype.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace sametype::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

    /// a/b with 2 <= b <= max_den, 1 <= a < b.
    Rational unit_open(long long max_den = 24) {
        const long long b = integer(2, max_den);
        return Rational(integer(1, b - 1), b);
    }

    /// A value in (0,1], hitting 1 occasionally.
    Rational unit_half_open(long long max_den = 24) {
        if (integer(0, 15) == 0) return Rational(1);
        return unit_open(max_den);
    }

    /// q = (a/b)^n so that q^(1/n) and friends are exact.
    Rational perfect_power(unsigned n) {
        const Rational base = unit_open(6);
        return Rational(mp::pow(mp::numerator(base), n), mp::pow(mp::denominator(base), n));
    }

    MixingDistribution mixture(std::size_t max_atoms = 3) {
        const auto n = static_cast<std::size_t>(integer(1, static_cast<long long>(max_atoms)));
        std::set<Rational> locations;
        while (locations.size() < n) locations.insert(unit_open(16));
        std::vector<long long> raw;
        long long total = 0;
        for (std::size_t i = 0; i < n; ++i) total += raw.emplace_back(integer(1, 9));
        std::vector<Atom> atoms;
        std::size_t i = 0;
        for (const auto& loc : locations) atoms.push_back({loc, Rational(raw[i++], total)});
        return MixingDistribution::make(std::move(atoms));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Q(1 - a + a s) by evaluating Q at the substituted point.
inline Rational thinned_at(const RationalPGF& q, const Rational& alpha, const Rational& s) {
    return eval(q, 1 - alpha + alpha * s);
}

/// Compares two PGFs at s = 1/8, 2/8, ..., 7/8 by exact evaluation.
inline bool agree_at_eighths(const RationalPGF& a, const RationalPGF& b) {
    for (int i = 1; i <= 7; ++i)
        if (eval(a, Rational(i, 8)) != eval(b, Rational(i, 8))) return false;
    return true;
}

/// Q1(s) == Q2(1 - a + a s) at s = i/8, i = 1..7.
inline bool thinning_relation_at_eighths(const RationalPGF& q1, const RationalPGF& q2, const Rational& alpha) {
    for (int i = 1; i <= 7; ++i)
        if (eval(q1, Rational(i, 8)) != thinned_at(q2, alpha, Rational(i, 8))) return false;
    return true;
}

/// Geometric pmf p q^k.
inline Rational geometric_pmf(const Rational& q, unsigned k) {
    return (1 - q) * Rational(mp::pow(mp::numerator(q), k), mp::pow(mp::denominator(q), k));
}

inline Rational rational_pow(const Rational& q, unsigned k) {
    return Rational(mp::pow(mp::numerator(q), k), mp::pow(mp::denominator(q), k));
}

/// Mixture pmf sum_i w_i (1 - q_i) q_i^k.
inline Rational mixture_pmf(const MixingDistribution& mix, unsigned k) {
    Rational sum = 0;
    for (const auto& a : mix.atoms()) sum += a.weight * geometric_pmf(a.location, k);
    return sum;
}

/// sum_i w_i q_i^t in long double.
inline long double moment_ld(const MixingDistribution& mix, long double t) {
    long double sum = 0;
    for (const auto& a : mix.atoms())
        sum += a.weight.convert_to<long double>() * std::pow(a.location.convert_to<long double>(), t);
    return sum;
}

inline bool close_ld(long double a, long double b, long double rel = 1e-12L) {
    const long double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0 || std::fabs(a - b) <= rel * scale;
}

/// Closed-form parameter of a thinned geometric: a q / (1 - q + a q).
inline Rational thinned_geometric_parameter(const Rational& q, const Rational& alpha) {
    return alpha * q / (1 - q + alpha * q);
}

}  // namespace sametype::testing
