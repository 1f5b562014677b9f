#include "gridcarbon/error.hpp"
#include "gridcarbon/grid_model.hpp"
#include "gridcarbon/timestamp.hpp"

#include "support/expect_error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace gridcarbon;


TEST(GridModel, ToyGridIsHalfCarbonFree)
{
    auto const reg = SourceRegistry::with_defaults();
    GridMix mix("toy", {{"wind", 500}, {"coal", 500}});
    EXPECT_DOUBLE_EQ(compute_average_ci(mix, reg).g_per_kwh, 500.0);
    EXPECT_DOUBLE_EQ(carbon_free_share(mix, reg), 0.5);
    EXPECT_DOUBLE_EQ(total_emissions_g(mix, reg), 500.0 * 1000.0 * 1000.0);
}

TEST(GridModel, ToyGridWithSolarFarm)
{
    auto const reg = SourceRegistry::with_defaults();
    GridMix mix("toy", {{"wind", 500}, {"solar", 20}, {"coal", 480}});
    EXPECT_DOUBLE_EQ(compute_average_ci(mix, reg).g_per_kwh, 480.0);
    EXPECT_DOUBLE_EQ(carbon_free_energy_mwh(mix, reg), 520.0);
}

TEST(GridModel, DefaultsAreCategoryNames)
{
    auto const reg = SourceRegistry::with_defaults();
    for (auto c : kAllCategories)
    {
        auto const& s = reg.at(to_string(c));
        EXPECT_EQ(s.category, c);
        EXPECT_EQ(s.cef_g_per_kwh, default_for(c).cef_g_per_kwh);
    }
    EXPECT_TRUE(reg.at("nuclear").carbon_free);
    EXPECT_FALSE(reg.at("gas").carbon_free);
    EXPECT_EQ(reg.at("coal").cef_g_per_kwh, 1000.0);
}

TEST(GridModel, ParseCategoryAcceptsDashes)
{
    EXPECT_EQ(parse_category("other-fossil"), SourceCategory::OtherFossil);
    EXPECT_EQ(parse_category("other_fossil"), SourceCategory::OtherFossil);
    EXPECT_FALSE(parse_category("plasma").has_value());
}

TEST(GridModel, EmptyMixThrows)
{
    auto const reg = SourceRegistry::with_defaults();
    EXPECT_EQ(kind_of([&] { compute_average_ci(GridMix("r", {}), reg); }), ErrorKind::EmptyMix);
    EXPECT_EQ(
        kind_of([&] { compute_average_ci(GridMix("r", {{"wind", 0.0}}), reg); }),
        ErrorKind::EmptyMix
    );
}

TEST(GridModel, RejectsNegativeAndNonFinite)
{
    EXPECT_EQ(kind_of([] { GridMix("r", {{"wind", -1.0}}); }), ErrorKind::InvalidMix);
    EXPECT_EQ(
        kind_of([] { GridMix("r", {{"wind", std::numeric_limits<double>::quiet_NaN()}}); }),
        ErrorKind::InvalidMix
    );
}

TEST(GridModel, UnknownSourceThrows)
{
    auto const reg = SourceRegistry::with_defaults();
    EXPECT_EQ(
        kind_of([&] { compute_average_ci(GridMix("r", {{"fusion", 1.0}}), reg); }),
        ErrorKind::UnknownSource
    );
}

TEST(GridModel, RegistryRejectsBadSources)
{
    SourceRegistry reg;
    reg.add({"pv", SourceCategory::Solar, 0.0, true});
    EXPECT_EQ(kind_of([&] { reg.add({"pv", SourceCategory::Solar, 0.0, true}); }), ErrorKind::InvalidSource);
    EXPECT_EQ(kind_of([&] { reg.add({"x", SourceCategory::Coal, -5.0, false}); }), ErrorKind::InvalidSource);
    EXPECT_EQ(kind_of([&] { reg.add({"y", SourceCategory::Coal, 900.0, true}); }), ErrorKind::InvalidSource);
}

TEST(GridModel, CefOverridesByIdAndCategory)
{
    auto reg = SourceRegistry::with_defaults();
    reg.add({"old_coal", SourceCategory::Coal, 1100.0, false});
    reg.apply_cef_overrides({{"coal", 820.0}});
    EXPECT_EQ(reg.at("coal").cef_g_per_kwh, 820.0);
    EXPECT_EQ(reg.at("old_coal").cef_g_per_kwh, 820.0);
    reg.apply_cef_overrides({{"old_coal", 1200.0}});
    EXPECT_EQ(reg.at("old_coal").cef_g_per_kwh, 1200.0);
    EXPECT_EQ(reg.at("coal").cef_g_per_kwh, 820.0);
    EXPECT_EQ(kind_of([&] { reg.apply_cef_overrides({{"nope", 1.0}}); }), ErrorKind::InvalidSource);
}

TEST(GridModel, AverageCiMatchesOracle)
{
    gen::Rng rng(11);
    auto const reg = SourceRegistry::with_defaults();
    for (int i = 0; i < 300; ++i)
    {
        auto const mix = gen::random_mix(rng);
        std::vector<oracle::Src> plain;
        for (auto const& [id, mwh] : mix.generation_mwh())
        {
            auto const& s = reg.at(id);
            plain.push_back({mwh, s.cef_g_per_kwh, s.carbon_free});
        }
        double const expect = oracle::average_ci(plain);
        EXPECT_NEAR(compute_average_ci(mix, reg).g_per_kwh, expect, 1e-9 * expect);
        EXPECT_NEAR(carbon_free_energy_mwh(mix, reg), oracle::cfe_mwh(plain), 1e-9 * oracle::total_mwh(plain));
    }
}

TEST(GridModel, CiIsBoundedByCefRange)
{
    gen::Rng rng(12);
    auto const reg = SourceRegistry::with_defaults();
    for (int i = 0; i < 300; ++i)
    {
        auto const mix = gen::random_mix(rng);
        double lo = 1e18, hi = -1.0;
        for (auto const& [id, mwh] : mix.generation_mwh())
        {
            if (mwh > 0)
            {
                lo = std::min(lo, reg.at(id).cef_g_per_kwh);
                hi = std::max(hi, reg.at(id).cef_g_per_kwh);
            }
        }
        double const ci = compute_average_ci(mix, reg).g_per_kwh;
        EXPECT_GE(ci, lo - 1e-9);
        EXPECT_LE(ci, hi + 1e-9);
    }
}

TEST(GridModel, CiIsScaleInvariant)
{
    gen::Rng rng(13);
    auto const reg = SourceRegistry::with_defaults();
    for (int i = 0; i < 200; ++i)
    {
        auto gen_mwh = gen::random_generation(rng);
        auto scaled = gen_mwh;
        double const k = gen::uniform(rng, 0.01, 100.0);
        for (auto& [id, v] : scaled)
        {
            v *= k;
        }
        double const a = compute_average_ci(GridMix("r", gen_mwh), reg).g_per_kwh;
        double const b = compute_average_ci(GridMix("r", scaled), reg).g_per_kwh;
        EXPECT_NEAR(a, b, 1e-9 * a);
    }
}

TEST(GridModel, TimeSeriesOrdering)
{
    auto const t0 = parse_hour_timestamp("2023-01-01T00:00:00Z");
    auto const t1 = parse_hour_timestamp("2023-01-01 01:00:00");
    MixTimeSeries ok("r", {GridMix("r", {{"wind", 1}}, t0), GridMix("r", {{"wind", 1}}, t1)});
    EXPECT_TRUE(ok.is_uniform());
    EXPECT_EQ(
        kind_of([&] { MixTimeSeries("r", {GridMix("r", {}, t1), GridMix("r", {}, t0)}); }),
        ErrorKind::InvalidMix
    );
    EXPECT_EQ(
        kind_of([&] { MixTimeSeries("r", {GridMix("other", {}, t0)}); }),
        ErrorKind::InvalidMix
    );
}

TEST(Timestamp, RoundTrip)
{
    auto const t = parse_hour_timestamp("2024-02-29T23:00:00Z");
    EXPECT_EQ(format_timestamp(t), "2024-02-29T23:00:00Z");
    EXPECT_EQ(kind_of([] { parse_hour_timestamp("2024-02-29T23:30:00Z"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_hour_timestamp("yesterday"); }), ErrorKind::ParseError);
}
