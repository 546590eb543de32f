#pragma once

/**
 * @file moments.hpp
 * @brief Finite mixing laws on (0,1) and their moment sequences.
 *
 * For a mixing law V with atoms q_i and weights w_i, m(t) = E(V^t) =
 * sum_i w_i q_i^t. At integer t this is the survival sequence of a geometric
 * mixture; as a function of real t >= 0 it is the Laplace transform of
 * -log V, which is what makes m(a t) meaningful for any a > 0.
 */

#include "number.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sametype {

struct Atom {
    Rational location;
    Rational weight;

    friend bool operator==(const Atom&, const Atom&) = default;
};

class MixingDistribution {
public:
    /// Validates and sorts atoms by location. Throws domain_error.
    static MixingDistribution make(std::vector<Atom> atoms) {
        if (atoms.empty()) throw domain_error("mixing distribution needs at least one atom");
        Rational total = 0;
        for (const auto& a : atoms) {
            if (a.location <= 0 || a.location >= 1)
                throw domain_error("atom location must lie in (0,1), got " + format_short(a.location));
            if (a.weight <= 0 || a.weight > 1)
                throw domain_error("atom weight must lie in (0,1], got " + format_short(a.weight));
            total += a.weight;
        }
        if (total != 1) throw domain_error("atom weights sum to " + format_short(total) + ", not 1");
        std::sort(atoms.begin(), atoms.end(),
                  [](const Atom& a, const Atom& b) { return a.location < b.location; });
        for (std::size_t i = 1; i < atoms.size(); ++i)
            if (atoms[i].location == atoms[i - 1].location)
                throw domain_error("duplicate atom location " + format_short(atoms[i].location));
        MixingDistribution out;
        out.atoms_ = std::move(atoms);
        return out;
    }

    static MixingDistribution point_mass(const Rational& q) { return make({{q, Rational(1)}}); }

    const std::vector<Atom>& atoms() const { return atoms_; }

    friend bool operator==(const MixingDistribution&, const MixingDistribution&) = default;

private:
    MixingDistribution() = default;
    std::vector<Atom> atoms_;
};

/// sum_i w_i q_i^t, exact whenever every q_i^t is rational.
inline Value moment(const MixingDistribution& mix, const Rational& t) {
    if (t < 0) throw domain_error("moment order must be nonnegative, got " + format_short(t));
    Rational exact_sum = 0;
    bool exact = true;
    for (const auto& a : mix.atoms()) {
        const auto p = exact_power(a.location, t);
        if (!p) {
            exact = false;
            break;
        }
        exact_sum += a.weight * *p;
    }
    if (exact) return Value::of(exact_sum);
    Real sum = 0;
    for (const auto& a : mix.atoms()) sum += to_real(a.weight) * real_power(a.location, to_real(t));
    return Value::inexact(sum);
}

/// Float path only; used for off-grid and irrational arguments.
inline Real moment_real(const MixingDistribution& mix, const Real& t) {
    if (t < 0) throw domain_error("moment order must be nonnegative");
    Real sum = 0;
    for (const auto& a : mix.atoms()) sum += to_real(a.weight) * real_power(a.location, t);
    return sum;
}

/**
 * k -> m(scale * k) for a mixing law. The scale composes multiplicatively,
 * which is the pushforward of the mixing law under x -> x^scale.
 */
class MomentSequence {
public:
    explicit MomentSequence(MixingDistribution mix, Rational scale = 1)
        : mix_(std::move(mix)), scale_(std::move(scale)) {
        if (scale_ <= 0) throw domain_error("moment scale must be positive");
    }

    const MixingDistribution& mixing() const { return mix_; }
    const Rational& scale() const { return scale_; }

    Value at(const Rational& k) const { return moment(mix_, scale_ * k); }
    Real at_real(const Real& k) const { return moment_real(mix_, to_real(scale_) * k); }

    /// m(0), ..., m(last).
    std::vector<Value> prefix(std::size_t last) const {
        std::vector<Value> out;
        out.reserve(last + 1);
        for (std::size_t k = 0; k <= last; ++k) out.push_back(at(Rational(k)));
        return out;
    }

    MomentSequence rescaled(const Rational& factor) const { return MomentSequence(mix_, scale_ * factor); }

    /// Atom powers q_i^scale when all are rational: the scaled mixing law.
    std::optional<MixingDistribution> exact_mixing() const {
        std::vector<Atom> atoms;
        for (const auto& a : mix_.atoms()) {
            auto p = exact_power(a.location, scale_);
            if (!p) return std::nullopt;
            atoms.push_back({*p, a.weight});
        }
        return MixingDistribution::make(std::move(atoms));
    }

private:
    MixingDistribution mix_;
    Rational scale_;
};

/// m(alpha k): the survival sequence behind the scaled d.f. 1 - m(alpha k).
inline MomentSequence scale_moments(const MixingDistribution& mix, const Rational& alpha) {
    return MomentSequence(mix, alpha);
}

struct MonotonicityResult {
    bool passed = true;
    /// First (j, k) with (-1)^j (Delta^j m)(k) < 0, scanning j then k.
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;
};

/**
 * Checks (-1)^j Delta^j m(k) >= -tol(j) for 1 <= j <= order and
 * 0 <= k <= K - j, where K + 1 is the prefix length. A pass is consistent
 * with, not a proof of, m being a moment sequence.
 *
 * tol(j) is zero for exact types; for floating types it is 2^j times the
 * base tolerance, which bounds the cancellation error of a j-th difference.
 */
template <class T>
MonotonicityResult completely_monotone_check(std::span<const T> prefix, std::size_t order,
                                             const T& base_tolerance = T(0)) {
    if (order < 1) throw insufficient_prefix_error("complete monotonicity order must be >= 1");
    if (prefix.empty() || prefix.size() - 1 < order)
        throw insufficient_prefix_error("prefix m(0..K) with K = " +
                                        std::to_string(prefix.empty() ? 0 : prefix.size() - 1) +
                                        " is too short for order " + std::to_string(order));
    std::vector<T> diff(prefix.begin(), prefix.end());
    T tol = base_tolerance;
    for (std::size_t j = 1; j <= order; ++j) {
        for (std::size_t k = 0; k + 1 < diff.size(); ++k) diff[k] = diff[k] - diff[k + 1];
        diff.pop_back();
        tol = tol * 2;
        // diff now holds (-1)^j Delta^j m(k).
        for (std::size_t k = 0; k < diff.size(); ++k)
            if (diff[k] < -tol) return {false, std::pair{j, k}};
    }
    return {};
}

/// Exact check when every value is exact, tolerant float check otherwise.
inline MonotonicityResult completely_monotone_check(std::span<const Value> prefix, std::size_t order) {
    const bool all_exact = std::all_of(prefix.begin(), prefix.end(), [](const Value& v) { return v.is_exact(); });
    if (all_exact) {
        std::vector<Rational> exact;
        for (const auto& v : prefix) exact.push_back(*v.exact);
        return completely_monotone_check<Rational>(exact, order);
    }
    std::vector<Real> approx;
    for (const auto& v : prefix) approx.push_back(v.approx);
    return completely_monotone_check<Real>(approx, order, float_tolerance);
}

}  // namespace sametype
