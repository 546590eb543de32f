#pragma once

/**
 * @file type_check.hpp
 * @brief Deciding "same type" by PGF thinning and by d.f. scaling.
 *
 * Thinning relation: Q1(s) = Q2(1 - a + a s) for some a in (0,1].
 * Scaling relation:  G(k) = F_a(k) = 1 - m(a k) for some a > 0.
 *
 * Both come in a fixed-a form (a given scale is plugged into the relation)
 * and an exists-a form (a scale is searched for). The counterexample report
 * couples the same a into both relations and also surfaces the exists-a
 * witnesses, so a "not equivalent" verdict is never overstated.
 */

#include "distribution.hpp"
#include "moments.hpp"
#include "number.hpp"
#include "pgf.hpp"

#include <cstddef>
#include <optional>
#include <variant>

namespace sametype {

inline constexpr std::size_t default_horizon = 32;

/// Q1 == thin(Q2, alpha), decided by polynomial identity.
inline bool def21_holds(const RationalPGF& q1, const RationalPGF& q2, const ScaleParam& alpha) {
    return pgf_equal(q1, thin(q2, alpha));
}

/**
 * Thinning geometric(q2) by a gives geometric(a q2 / (1 - q2 + a q2)).
 * Solving for a with target q1 gives a = q1 (1 - q2) / (q2 (1 - q1)),
 * admissible only when it lies in (0,1].
 */
inline std::optional<Rational> def21_find_alpha_geometric(const Rational& q1, const Rational& q2) {
    for (const auto* q : {&q1, &q2})
        if (*q <= 0 || *q >= 1) throw domain_error("geometric parameter must lie in (0,1), got " + format_short(*q));
    const Rational alpha = q1 * (1 - q2) / (q2 * (1 - q1));
    if (alpha > 0 && alpha <= 1) return alpha;
    return std::nullopt;
}

/**
 * Exists-a search for arbitrary rational PGFs.
 *
 * Evaluating the relation at s = 0 gives Q1(0) = Q2(1 - a), and Q2 is
 * nondecreasing on [0,1], so a is found by bisection to 1e-12. The
 * candidate is then snapped to the nearest rational with denominator at
 * most 10^6 and accepted only if the exact identity holds.
 */
inline std::optional<Rational> def21_find_alpha(const RationalPGF& q1, const RationalPGF& q2) {
    const Real target = to_real(eval(q1, Rational(0)));
    auto f = [&](const Real& a) { return eval_real(q2, Real(1) - a); };
    if (target >= 1 || target < f(Real(1)) - float_tolerance) return std::nullopt;
    Real lo = 0, hi = 1;
    // f(lo) >= target >= f(hi)
    while (hi - lo > Real("1e-14")) {
        const Real mid = (lo + hi) / 2;
        if (f(mid) >= target)
            lo = mid;
        else
            hi = mid;
    }
    const Real estimate = (lo + hi) / 2;
    const Rational candidate = rationalize(estimate, Integer(1'000'000));
    if (candidate <= 0 || candidate > 1) return std::nullopt;
    if (mp::abs(to_real(candidate) - estimate) > Real("1e-9")) return std::nullopt;
    if (!def21_holds(q1, q2, ScaleParam(candidate))) return std::nullopt;
    return candidate;
}

/// survival_G(k) == survival_F(a k) for k = 0..horizon.
inline bool def22_holds(const DiscreteDist& f, const DiscreteDist& g, const ScaleParam& alpha,
                        std::size_t horizon = default_horizon) {
    if (horizon < 8) throw domain_error("Definition-2.2 horizon must be at least 8");
    if (!f.has_real_extension())
        throw unsupported_provenance_error(f.describe() + " has no survival function off the integers");
    for (std::size_t k = 0; k <= horizon; ++k)
        if (!same_value(g.survival(k), f.survival_at(alpha.value() * k))) return false;
    return true;
}

/// Float-path variant for an irrational scale.
inline bool def22_holds_real(const DiscreteDist& f, const DiscreteDist& g, const Real& alpha,
                             std::size_t horizon = default_horizon) {
    if (!f.has_real_extension())
        throw unsupported_provenance_error(f.describe() + " has no survival function off the integers");
    for (std::size_t k = 0; k <= horizon; ++k)
        if (!approx_equal(g.survival(k).approx, f.survival_real(alpha * k))) return false;
    return true;
}

/// A scale known to 50 digits, with its exact value when it is rational.
struct ScaleEstimate {
    Real value;
    std::optional<Rational> exact;
};

namespace detail {
inline std::optional<Rational> snap_exponent(const Real& estimate, const Rational& base, const Rational& target) {
    const Rational r = rationalize(estimate, Integer(1'000'000));
    if (r <= 0 || mp::abs(to_real(r) - estimate) > Real("1e-20") * std::max<Real>(Real(1), estimate)) return std::nullopt;
    const auto p = exact_power(base, r);
    if (p && *p == target) return r;
    return std::nullopt;
}
}  // namespace detail

/// a = ln(qG) / ln(qF), so that qF^a = qG.
inline ScaleEstimate def22_find_alpha_geometric(const Rational& q_f, const Rational& q_g) {
    for (const auto* q : {&q_f, &q_g})
        if (*q <= 0 || *q >= 1) throw domain_error("geometric parameter must lie in (0,1), got " + format_short(*q));
    const Real value = mp::log(to_real(q_g)) / mp::log(to_real(q_f));
    return {value, detail::snap_exponent(value, q_f, q_g)};
}

/**
 * Exists-a search for distributions with a real survival extension: solve
 * m_F(a) = m_G(1) by bisection, then verify over the horizon.
 */
inline std::optional<ScaleEstimate> def22_find_alpha(const DiscreteDist& f, const DiscreteDist& g,
                                                     std::size_t horizon = default_horizon) {
    if (!f.has_real_extension())
        throw unsupported_provenance_error(f.describe() + " has no survival function off the integers");
    const Real target = g.survival(1).approx;
    if (target <= 0 || target >= 1) return std::nullopt;
    Real lo = 0, hi = 1;
    while (f.survival_real(hi) > target) {
        lo = hi;
        hi *= 2;
        if (hi > Real(1e6)) return std::nullopt;
    }
    while ((hi - lo) > Real("1e-40") * hi) {
        const Real mid = (lo + hi) / 2;
        if (f.survival_real(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    const Real estimate = (lo + hi) / 2;
    const Rational r = rationalize(estimate, Integer(1'000'000));
    if (r > 0 && mp::abs(to_real(r) - estimate) <= Real("1e-20") * std::max<Real>(Real(1), estimate) &&
        def22_holds(f, g, ScaleParam(r), horizon))
        return ScaleEstimate{to_real(r), r};
    if (def22_holds_real(f, g, estimate, horizon)) return ScaleEstimate{estimate, std::nullopt};
    return std::nullopt;
}

/**
 * Everything the geometric counterexample needs: X = geometric(q),
 * Y = df_scale(X, a) = geometric(q^a), both relations at the same a, and
 * the exists-a thinning witnesses in both directions.
 */
struct TypeCheckReport {
    Rational q;
    ScaleParam alpha{Rational(1)};
    /// q^a, the geometric parameter of Y.
    Rational q_y;
    /// False when q^a was irrational and replaced by a rational approximation.
    bool exact = true;
    RationalPGF qx_pgf = make_geometric_pgf(Rational(1, 2));
    RationalPGF qy_pgf = qx_pgf;
    RationalPGF thinned_x = qx_pgf;
    RationalPGF thinned_y = qx_pgf;
    bool def22_holds = false;
    /// Q_X(s) == Q_Y(1 - a + a s)
    bool def21_xy = false;
    /// Q_Y(s) == Q_X(1 - a + a s)
    bool def21_yx = false;
    /// def22_holds implies (def21_xy or def21_yx).
    bool definitions_agree = false;
    std::optional<Rational> def21_witness_alpha_xy;
    std::optional<Rational> def21_witness_alpha_yx;

    /// The first available witness, preferring the X-vs-Y direction.
    std::optional<Rational> def21_witness_alpha() const {
        return def21_witness_alpha_xy ? def21_witness_alpha_xy : def21_witness_alpha_yx;
    }

    friend bool operator==(const TypeCheckReport&, const TypeCheckReport&) = default;
};

/// Nearest-rational stand-in used when q^a is irrational.
inline constexpr long long float_fallback_max_denominator = 1'000'000'000'000LL;

inline TypeCheckReport counterexample_report(const Rational& q, const Rational& alpha_value, bool allow_float = false,
                                             std::size_t horizon = default_horizon) {
    const ScaleParam alpha(alpha_value);
    if (!alpha.def21_admissible())
        throw domain_error("counterexample needs alpha in (0,1], got " + format_short(alpha_value));
    TypeCheckReport r;
    r.q = q;
    r.alpha = alpha;
    const DiscreteDist x = geometric(q);
    if (auto exact = exact_power(q, alpha_value)) {
        r.q_y = *exact;
    } else {
        if (!allow_float)
            throw domain_error("q^alpha = (" + format_short(q) + ")^(" + format_short(alpha_value) + ")" +
                               " is irrational; enable the float fallback to continue");
        r.exact = false;
        r.q_y = rationalize(real_power(q, to_real(alpha_value)), Integer(float_fallback_max_denominator));
    }
    const DiscreteDist y = geometric(r.q_y);
    r.qx_pgf = make_geometric_pgf(q);
    r.qy_pgf = make_geometric_pgf(r.q_y);
    r.thinned_x = thin(r.qx_pgf, alpha);
    r.thinned_y = thin(r.qy_pgf, alpha);
    // A rational stand-in for q^a only matches to float precision, so compare on the float path.
    r.def22_holds = r.exact ? sametype::def22_holds(x, y, alpha, horizon)
                            : def22_holds_real(x, y, to_real(alpha.value()), horizon);
    r.def21_xy = def21_holds(r.qx_pgf, r.qy_pgf, alpha);
    r.def21_yx = def21_holds(r.qy_pgf, r.qx_pgf, alpha);
    r.definitions_agree = !r.def22_holds || r.def21_xy || r.def21_yx;
    r.def21_witness_alpha_xy = def21_find_alpha_geometric(q, r.q_y);
    r.def21_witness_alpha_yx = def21_find_alpha_geometric(r.q_y, q);
    return r;
}

/**
 * Fixed-a and exists-a verdicts for an arbitrary pair (F, G). Thinning
 * verdicts need closed-form PGFs and are absent otherwise.
 */
struct PairCheck {
    std::optional<Rational> alpha;
    // fixed-a
    std::optional<bool> def22_fg;  ///< G(k) = F(a k)
    std::optional<bool> def22_gf;  ///< F(k) = G(a k)
    std::optional<bool> def21_fg;  ///< Q_F(s) = Q_G(1 - a + a s)
    std::optional<bool> def21_gf;  ///< Q_G(s) = Q_F(1 - a + a s)
    // exists-a
    std::optional<Rational> def21_witness_fg;
    std::optional<Rational> def21_witness_gf;
    std::optional<ScaleEstimate> def22_witness_fg;
    std::optional<ScaleEstimate> def22_witness_gf;
};

inline std::optional<Rational> geometric_parameter(const DiscreteDist& d) {
    if (const auto* g = std::get_if<provenance::Geometric>(&d.provenance())) return g->q;
    return std::nullopt;
}

inline PairCheck check_fixed(const DiscreteDist& f, const DiscreteDist& g, const ScaleParam& alpha,
                             std::size_t horizon = default_horizon) {
    PairCheck out;
    out.alpha = alpha.value();
    out.def22_fg = def22_holds(f, g, alpha, horizon);
    out.def22_gf = def22_holds(g, f, alpha, horizon);
    if (alpha.def21_admissible()) {
        const auto pf = pgf_of(f);
        const auto pg = pgf_of(g);
        if (pf.exact && pg.exact) {
            out.def21_fg = def21_holds(*pf.exact, *pg.exact, alpha);
            out.def21_gf = def21_holds(*pg.exact, *pf.exact, alpha);
        }
    }
    return out;
}

inline PairCheck check_exists(const DiscreteDist& f, const DiscreteDist& g, std::size_t horizon = default_horizon) {
    PairCheck out;
    const auto qf = geometric_parameter(f);
    const auto qg = geometric_parameter(g);
    if (qf && qg) {
        out.def21_witness_fg = def21_find_alpha_geometric(*qf, *qg);
        out.def21_witness_gf = def21_find_alpha_geometric(*qg, *qf);
        out.def22_witness_fg = def22_find_alpha_geometric(*qf, *qg);
        out.def22_witness_gf = def22_find_alpha_geometric(*qg, *qf);
        return out;
    }
    const auto pf = pgf_of(f);
    const auto pg = pgf_of(g);
    if (pf.exact && pg.exact) {
        out.def21_witness_fg = def21_find_alpha(*pf.exact, *pg.exact);
        out.def21_witness_gf = def21_find_alpha(*pg.exact, *pf.exact);
    }
    out.def22_witness_fg = def22_find_alpha(f, g, horizon);
    out.def22_witness_gf = def22_find_alpha(g, f, horizon);
    return out;
}

}  // namespace sametype
