#include "gridcarbon/stats.hpp"

#include "support/expect_error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace gridcarbon;

namespace
{

std::vector<RegionDataset> fleet()
{
    std::vector<RegionDataset> out;
    for (auto& r : load_region_dir(std::filesystem::path(GRIDCARBON_DATA_DIR) / "fleet"))
    {
        out.push_back(std::move(r.dataset));
    }
    return out;
}

} // namespace

TEST(Stats, FleetPenetrationHandValues)
{
    auto const reg = SourceRegistry::with_defaults();
    auto const f = penetration_fleet(fleet(), reg);
    std::map<std::string, double> expected{
        {"alpha", 100.0 * 500.0 / 2000.0},
        {"beta", 100.0 * 100.0 / 2000.0},
        {"delta", 100.0 * 400.0 / 1500.0},
        {"epsilon", 100.0 * 500.0 / 2000.0},
        {"gamma", 100.0 * 1000.0 / 2000.0},
    };
    ASSERT_EQ(f.regions.size(), expected.size());
    for (auto const& s : f.regions)
    {
        EXPECT_NEAR(s.solar_wind_pct, expected.at(s.region), 1e-9 * expected.at(s.region)) << s.region;
    }
    ASSERT_EQ(f.cdf.size(), 4u);
    EXPECT_DOUBLE_EQ(f.cdf[0].value, 5.0);
    EXPECT_DOUBLE_EQ(f.cdf[0].cumulative, 0.2);
    EXPECT_DOUBLE_EQ(f.cdf[1].cumulative, 0.6);
    EXPECT_DOUBLE_EQ(f.cdf.back().cumulative, 1.0);
}

TEST(Stats, HourlyMeanDiffersWhenHoursAreUneven)
{
    auto const reg = SourceRegistry::with_defaults();
    auto const ds = fleet();
    auto const delta = std::find_if(ds.begin(), ds.end(), [](auto const& d) { return d.region == "delta"; });
    EXPECT_NEAR(penetration(*delta, reg, kSolarWind, PenetrationMode::HourlyMean).solar_wind_pct, 25.0, 1e-12);
    EXPECT_NEAR(penetration(*delta, reg).solar_wind_pct, 80.0 / 3.0, 1e-12);
}

TEST(Stats, EmptyFleetThrows)
{
    auto const reg = SourceRegistry::with_defaults();
    EXPECT_EQ(kind_of([&] { penetration_fleet({}, reg); }), ErrorKind::EmptyFleet);
}

TEST(Stats, CdfMatchesOracle)
{
    gen::Rng rng(41);
    for (int trial = 0; trial < 200; ++trial)
    {
        std::vector<double> v(gen::index(rng, 1, 40));
        for (auto& x : v)
        {
            x = static_cast<double>(gen::index(rng, 0, 10)) * 7.5;
        }
        auto const got = empirical_cdf(v);
        auto const want = oracle::cdf(v);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < got.size(); ++i)
        {
            EXPECT_EQ(got[i].value, want[i].first);
            EXPECT_DOUBLE_EQ(got[i].cumulative, want[i].second);
            if (i > 0)
            {
                EXPECT_GT(got[i].value, got[i - 1].value);
                EXPECT_GT(got[i].cumulative, got[i - 1].cumulative);
            }
        }
        EXPECT_DOUBLE_EQ(got.back().cumulative, 1.0);
    }
}

TEST(Stats, SouthAustraliaInflation)
{
    auto const reg = SourceRegistry::with_defaults();
    auto const ds = load_region_csv(
        std::filesystem::path(GRIDCARBON_DATA_DIR) / "south-australia" / "south-australia.csv"
    ).dataset;
    EXPECT_NEAR(penetration(ds, reg).solar_wind_pct, 66.07, 1e-9);
    auto const r = residual_inflation(ds, solar_wind_fraction(1.0), reg);
    EXPECT_NEAR(r.ci_loc.g_per_kwh, 125.67, 1e-9);
    EXPECT_NEAR(r.ci_res.g_per_kwh, 125.67 / (1.0 - 0.6607), 1e-9);
    EXPECT_NEAR(r.increase_pct, 100.0 * (1.0 / (1.0 - 0.6607) - 1.0), 1e-9);
}

TEST(Stats, InflationUsesPublishedCiWhenSourcesAreUnknownToRegistry)
{
    SourceRegistry reg;
    reg.add({"wind", SourceCategory::Wind, 0.0, true});
    reg.add({"mystery", SourceCategory::Unknown, 700.0, false});
    std::vector<GridMix> steps{
        GridMix("x", {{"wind", 50}, {"mystery", 50}}, parse_hour_timestamp("2023-01-01T00:00:00Z")),
    };
    RegionDataset ds{"x", MixTimeSeries("x", steps), {"wind", "mystery"}, std::vector<double>{300.0}};
    auto const pub = residual_inflation(ds, solar_wind_fraction(1.0), reg, EmissionsBasis::PublishedCi);
    EXPECT_DOUBLE_EQ(pub.ci_loc.g_per_kwh, 300.0);
    EXPECT_DOUBLE_EQ(pub.ci_res.g_per_kwh, 600.0);
    auto const own = residual_inflation(ds, solar_wind_fraction(1.0), reg, EmissionsBasis::Registry);
    EXPECT_DOUBLE_EQ(own.ci_loc.g_per_kwh, 350.0);
    EXPECT_DOUBLE_EQ(own.increase_pct, 100.0);
}
