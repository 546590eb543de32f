#include "support.hpp"

#include <gtest/gtest.h>

namespace sametype {
namespace {

using testing::Gen;

TEST(Geometric, Examples) {
    const auto d = geometric(Rational(1, 4));
    EXPECT_EQ(d.df(2).exact, 1 - Rational(1, 4) * Rational(1, 4));
    EXPECT_EQ(d.df(2).exact, Rational(15, 16));
    EXPECT_EQ(d.df(0).exact, Rational(0));
    EXPECT_EQ(d.pmf(0).exact, Rational(3, 4));
    EXPECT_EQ(d.describe(), "geometric(1/4)");
    EXPECT_THROW(geometric(Rational(1)), domain_error);
    EXPECT_THROW(geometric(Rational(0)), domain_error);
}

TEST(MixtureDist, Examples) {
    const auto point = mixture_dist(MixingDistribution::point_mass(Rational(1, 4)));
    const auto geo = geometric(Rational(1, 4));
    for (std::size_t k = 0; k <= 16; ++k) EXPECT_EQ(point.survival(k).exact, geo.survival(k).exact);

    const auto two = mixture_dist(
        MixingDistribution::make({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(1, 2)}}));
    EXPECT_EQ(two.df(1).exact, 1 - Rational(1, 2) * Rational(1, 2) - Rational(1, 2) * Rational(1, 4));
    EXPECT_EQ(two.df(1).exact, Rational(5, 8));

    Gen gen(9);
    for (int i = 0; i < 20; ++i) {
        const auto d = mixture_dist(gen.mixture());
        for (std::size_t k = 0; k <= 64; ++k) EXPECT_GE(*d.pmf(k).exact, 0);
    }
}

TEST(DfScale, Examples) {
    const auto x = geometric(Rational(1, 4));
    const auto half = df_scale(x, ScaleParam(Rational(1, 2)));
    const auto two = df_scale(x, ScaleParam(Rational(2)));
    const auto one = df_scale(x, ScaleParam(Rational(1)));
    const auto g_half = geometric(Rational(1, 2));
    const auto g_sixteenth = geometric(Rational(1, 16));
    for (std::size_t k = 0; k <= 20; ++k) {
        EXPECT_EQ(half.survival(k).exact, g_half.survival(k).exact);
        EXPECT_EQ(two.survival(k).exact, g_sixteenth.survival(k).exact);
        EXPECT_EQ(one.survival(k).exact, x.survival(k).exact);
    }
    EXPECT_EQ(half.describe(), "scaled(geometric(1/4), 1/2)");
}

TEST(DfScale, TabulatedHasNoRealExtension) {
    const auto t = DiscreteDist::tabulated({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
    EXPECT_FALSE(t.has_real_extension());
    EXPECT_THROW(df_scale(t, ScaleParam(Rational(1, 2))), unsupported_provenance_error);
    EXPECT_THROW(t.survival_at(Rational(1, 2)), unsupported_provenance_error);
    EXPECT_THROW(t.survival_real(Real(1)), unsupported_provenance_error);
    EXPECT_EQ(t.survival_at(Rational(1)).exact, Rational(1, 2));
    EXPECT_EQ(t.survival(7).exact, Rational(0));
    EXPECT_THROW(DiscreteDist::tabulated({Rational(1, 2)}), domain_error);
    EXPECT_THROW(DiscreteDist::tabulated({Rational(3, 2), Rational(-1, 2)}), domain_error);
}

TEST(DfScale, IrrationalPowersUseFloatPath) {
    const auto d = df_scale(geometric(Rational(1, 4)), ScaleParam(Rational(1, 3)));
    EXPECT_FALSE(d.survival(1).is_exact());
    EXPECT_TRUE(d.survival(3).is_exact());
    EXPECT_EQ(d.survival(3).exact, Rational(1, 4));
    for (std::size_t k = 0; k <= 64; ++k)
        EXPECT_TRUE(testing::close_ld(d.survival(k).approx.convert_to<long double>(), std::pow(0.25L, k / 3.0L)));
}

TEST(PgfOf, Examples) {
    EXPECT_EQ(to_string(*pgf_of(geometric(Rational(1, 4))).exact), "3/(4-s)");
    EXPECT_EQ(to_string(*pgf_of(df_scale(geometric(Rational(1, 4)), ScaleParam(Rational(1, 2)))).exact), "1/(2-s)");
    EXPECT_EQ(to_string(*pgf_of(DiscreteDist::tabulated({Rational(1, 2), Rational(1, 2)})).exact), "(1+s)/2");
    Gen gen(10);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(eval(*pgf_of(mixture_dist(gen.mixture())).exact, Rational(1)), 1);
}

TEST(PgfOf, TruncatedSeriesWhenNoClosedForm) {
    const auto d = df_scale(geometric(Rational(1, 4)), ScaleParam(Rational(1, 3)));
    const auto p = pgf_of(d, 40);
    EXPECT_FALSE(p.exact.has_value());
    ASSERT_EQ(p.series.size(), 40u);
    Real total = 0;
    for (const auto& x : p.series) total += x;
    EXPECT_TRUE(approx_equal(total + p.tail_bound, Real(1)));
    EXPECT_TRUE(approx_equal(p.tail_bound, real_power(Rational(1, 4), Real(40) / 3)));
}

// Properties

TEST(DistributionProperties, ScaleSemigroupOnSurvival) {
    Gen gen(31);
    for (int i = 0; i < 40; ++i) {
        const auto d = mixture_dist(gen.mixture());
        const Rational a = gen.unit_open(6) * gen.integer(1, 3), b = gen.unit_open(6) * gen.integer(1, 3);
        const auto twice = df_scale(df_scale(d, ScaleParam(a)), ScaleParam(b));
        const auto once = df_scale(d, ScaleParam(a * b));
        for (std::size_t k = 0; k <= 64; ++k) EXPECT_TRUE(same_value(twice.survival(k), once.survival(k)));
    }
}

TEST(DistributionProperties, TelescopingAndConvention) {
    Gen gen(32);
    for (int i = 0; i < 40; ++i) {
        const auto d = mixture_dist(gen.mixture());
        EXPECT_EQ(d.df(0).exact, Rational(0));
        Rational cumulative = 0;
        for (std::size_t k = 0; k <= 64; ++k) {
            EXPECT_EQ(cumulative, *d.df(k).exact);
            cumulative += *d.pmf(k).exact;
            EXPECT_EQ(*d.pmf(k).exact, *d.df(k + 1).exact - *d.df(k).exact);
        }
    }
}

TEST(DistributionProperties, SeriesMatchesPmfAcrossModules) {
    Gen gen(33);
    for (int i = 0; i < 40; ++i) {
        const auto mix = gen.mixture();
        const auto d = mixture_dist(mix);
        const auto c = series_coefficients(*pgf_of(d).exact, 32);
        for (unsigned k = 0; k < 32; ++k) {
            EXPECT_EQ(c[k], *d.pmf(k).exact);
            EXPECT_EQ(c[k], testing::mixture_pmf(mix, k));
        }
    }
}

}  // namespace
}  // namespace sametype
