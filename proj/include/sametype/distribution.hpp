#pragma once

/**
 * @file distribution.hpp
 * @brief Distributions on {0,1,2,...} seen through their survival sequence.
 *
 * Convention: the d.f. is left-continuous, F(k) = P(X < k) = 1 - m(k) with
 * m(k) = P(X >= k). Hence F(0) = 0 and pmf(k) = F(k+1) - F(k). Most
 * libraries use P(X <= k) instead; do not mix the two.
 *
 * Geometric, mixture and scaled distributions carry a moment sequence that
 * is defined at every real argument, which is what the d.f. scale family
 * F_a(k) = 1 - m(a k) needs. Tabulated distributions are only known on the
 * integers and cannot be rescaled.
 */

#include "moments.hpp"
#include "number.hpp"
#include "pgf.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sametype {

class DiscreteDist;

namespace provenance {
struct Geometric {
    Rational q;
};
struct Mixture {
    MixingDistribution mix;
};
struct Scaled {
    std::shared_ptr<const DiscreteDist> base;
    Rational alpha;
};
struct Tabulated {
    std::vector<Rational> pmf;
};
}  // namespace provenance

using Provenance =
    std::variant<provenance::Geometric, provenance::Mixture, provenance::Scaled, provenance::Tabulated>;

class DiscreteDist {
public:
    static DiscreteDist from_moments(MomentSequence seq, Provenance prov) {
        return DiscreteDist(std::move(prov), std::move(seq), {});
    }

    /// Finite-support law from P(X=0..n-1); probabilities must sum to 1.
    static DiscreteDist tabulated(std::vector<Rational> pmf) {
        Rational total = 0;
        for (const auto& p : pmf) {
            if (p < 0) throw domain_error("negative probability " + format_short(p));
            total += p;
        }
        if (total != 1) throw domain_error("probabilities sum to " + format_short(total) + ", not 1");
        std::vector<Rational> survival(pmf.size() + 1);
        survival.back() = 0;
        for (std::size_t k = pmf.size(); k-- > 0;) survival[k] = survival[k + 1] + pmf[k];
        return DiscreteDist(provenance::Tabulated{std::move(pmf)}, std::nullopt, std::move(survival));
    }

    const Provenance& provenance() const { return prov_; }

    /// Present for every provenance except tabulated.
    const std::optional<MomentSequence>& moments() const { return seq_; }

    bool has_real_extension() const { return seq_.has_value(); }

    /// m(k) = P(X >= k).
    Value survival(std::size_t k) const {
        if (seq_) return seq_->at(Rational(k));
        return Value::of(k < table_.size() ? table_[k] : Rational(0));
    }

    /// m(t) at a nonnegative rational t; needs the real extension off the integers.
    Value survival_at(const Rational& t) const {
        if (seq_) return seq_->at(t);
        if (mp::denominator(t) == 1 && t >= 0) return survival(mp::numerator(t).convert_to<std::size_t>());
        throw unsupported_provenance_error("tabulated distribution has no survival value off the integers");
    }

    Real survival_real(const Real& t) const {
        if (!seq_) throw unsupported_provenance_error("tabulated distribution has no survival value off the integers");
        return seq_->at_real(t);
    }

    /// F(k) = P(X < k).
    Value df(std::size_t k) const { return Value::of(Rational(1)) - survival(k); }

    Value pmf(std::size_t k) const { return survival(k) - survival(k + 1); }

    std::string describe() const;

private:
    DiscreteDist(Provenance prov, std::optional<MomentSequence> seq, std::vector<Rational> table)
        : prov_(std::move(prov)), seq_(std::move(seq)), table_(std::move(table)) {}

    Provenance prov_;
    std::optional<MomentSequence> seq_;
    std::vector<Rational> table_;
};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

inline std::string describe(const MixingDistribution& mix) {
    std::string out = "{";
    for (std::size_t i = 0; i < mix.atoms().size(); ++i) {
        if (i) out += ", ";
        out += format_short(mix.atoms()[i].location) + ":" + format_short(mix.atoms()[i].weight);
    }
    return out + "}";
}

inline std::string DiscreteDist::describe() const {
    return std::visit(
        overloaded{
            [](const provenance::Geometric& g) { return "geometric(" + format_short(g.q) + ")"; },
            [](const provenance::Mixture& m) { return "mixture" + sametype::describe(m.mix); },
            [](const provenance::Scaled& s) {
                return "scaled(" + s.base->describe() + ", " + format_short(s.alpha) + ")";
            },
            [](const provenance::Tabulated& t) { return "tabulated(" + std::to_string(t.pmf.size()) + " atoms)"; },
        },
        prov_);
}

/// Survival q^k.
inline DiscreteDist geometric(const Rational& q) {
    if (q <= 0 || q >= 1) throw domain_error("geometric parameter must lie in (0,1), got " + format_short(q));
    return DiscreteDist::from_moments(MomentSequence(MixingDistribution::point_mass(q)), provenance::Geometric{q});
}

/// Survival m(k) = E(V^k): F(k) = 1 - m(k).
inline DiscreteDist mixture_dist(const MixingDistribution& mix) {
    return DiscreteDist::from_moments(MomentSequence(mix), provenance::Mixture{mix});
}

/// The scale-family member with survival m(alpha k).
inline DiscreteDist df_scale(const DiscreteDist& d, const ScaleParam& alpha) {
    if (!d.moments())
        throw unsupported_provenance_error("df_scale needs a survival function defined off the integers; " +
                                           d.describe() + " has none");
    return DiscreteDist::from_moments(d.moments()->rescaled(alpha.value()),
                                      provenance::Scaled{std::make_shared<const DiscreteDist>(d), alpha.value()});
}

/// A PGF either in closed form or as a truncated series with a tail bound.
struct PgfOf {
    std::optional<RationalPGF> exact;
    /// Truncated pmf when no closed form exists.
    std::vector<Real> series;
    /// Upper bound on the omitted probability mass, survival(series.size()).
    Real tail_bound = 0;
};

inline constexpr std::size_t default_truncation = 64;

/// Rational PGF sum_i w_i (1-q_i)/(1-q_i s) of a finite geometric mixture.
inline RationalPGF mixture_pgf(const MixingDistribution& mix) {
    RationalPolynomial num;
    RationalPolynomial den{Rational(1)};
    for (const auto& a : mix.atoms()) {
        const auto factor = RationalPolynomial::linear(1, -a.location);
        num = num * factor + RationalPolynomial{a.weight * (1 - a.location)} * den;
        den = den * factor;
    }
    return RationalPGF::make(std::move(num), std::move(den));
}

inline PgfOf pgf_of(const DiscreteDist& d, std::size_t truncation = default_truncation) {
    PgfOf out;
    if (const auto* t = std::get_if<provenance::Tabulated>(&d.provenance())) {
        out.exact = RationalPGF::from_pmf(t->pmf);
        return out;
    }
    if (auto mix = d.moments()->exact_mixing()) {
        out.exact = mixture_pgf(*mix);
        return out;
    }
    for (std::size_t k = 0; k < truncation; ++k) out.series.push_back(d.pmf(k).approx);
    out.tail_bound = d.survival(truncation).approx;
    return out;
}

}  // namespace sametype
