#include "gridcarbon/attribution.hpp"
#include "gridcarbon/contracts.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace gridcarbon;

TEST(Properties, ResidualCiClosedForm)
{
    // Contract a share f of all grid energy out of the carbon-free sources.
    gen::Rng rng(61);
    auto const reg = SourceRegistry::with_defaults();
    for (int i = 0; i < 1000; ++i)
    {
        double const f = gen::uniform(rng, 0.0, 0.95);
        auto const mix = gen::random_mix_with_cfe_share(rng, f);
        double const per_source
            = std::min(1.0, f * mix.total_energy_mwh() / carbon_free_energy_mwh(mix, reg));
        CategoryFractions fr;
        for (auto c : kAllCategories)
        {
            if (default_for(c).carbon_free)
            {
                fr[c] = per_source;
            }
        }
        double const ci_loc = compute_average_ci(mix, reg).g_per_kwh;
        double const ci_res = compute_residual_ci(mix, make_fraction_contracts(mix, fr, reg), reg).g_per_kwh;
        double const want = oracle::residual_ci_closed_form(ci_loc, f);
        EXPECT_NEAR(ci_res, want, 1e-9 * want);
    }
}

TEST(Properties, ResidualCiIsMonotoneInContractedEnergy)
{
    gen::Rng rng(62);
    auto const reg = SourceRegistry::with_defaults();
    for (int i = 0; i < 300; ++i)
    {
        auto const mix = gen::random_mix(rng);
        double prev = compute_average_ci(mix, reg).g_per_kwh;
        for (double f : {0.1, 0.3, 0.5, 0.7, 0.9})
        {
            double const ci = compute_residual_ci(
                mix, make_fraction_contracts(mix, solar_wind_fraction(f), reg), reg
            ).g_per_kwh;
            EXPECT_GE(ci, prev * (1.0 - 1e-12));
            prev = ci;
        }
    }
}

TEST(Properties, EmissionsAreConservedUnderCarbonFreeContracting)
{
    gen::Rng rng(63);
    auto const reg = SourceRegistry::with_defaults();
    for (int i = 0; i < 300; ++i)
    {
        auto const mix = gen::random_mix(rng, "g");
        std::vector<Contract> cs;
        for (int k = 0; k < 4; ++k)
        {
            cs.push_back({"k" + std::to_string(k), "B", ContractKind::Rec,
                          k % 2 ? "solar" : "wind", "g", {gen::uniform(rng, 0.0, 3000.0)}});
        }
        auto const r = compute_residual_mix(mix, cs, reg);
        double const before = total_emissions_g(mix, reg);
        EXPECT_NEAR(total_emissions_g(r.mix, reg), before, 1e-9 * before);
        EXPECT_NEAR(
            r.mix.total_energy_mwh() + r.total_removed_mwh(),
            mix.total_energy_mwh(),
            1e-9 * mix.total_energy_mwh()
        );
        double delivered = 0.0;
        for (auto const& [id, e] : r.delivered_mwh)
        {
            delivered += e;
        }
        EXPECT_NEAR(delivered, r.total_removed_mwh(), 1e-9 * std::max(1.0, delivered));
    }
}

TEST(Properties, MarketEqualsLocationWithoutContracts)
{
    gen::Rng rng(64);
    auto const reg = SourceRegistry::with_defaults();
    for (int i = 0; i < 300; ++i)
    {
        MixesByRegion mixes{{"g", gen::random_mix(rng, "g")}};
        std::vector<Consumer> cs;
        for (int k = 0; k < 3; ++k)
        {
            cs.push_back({"c" + std::to_string(k), "g", gen::uniform(rng, 0.0, 1e5),
                          AccountingMethod::MarketBased});
        }
        auto const loc = attribute_location_based(mixes.at("g"), cs, reg);
        auto const mkt = attribute_market_based(mixes, {}, cs, reg);
        for (std::size_t k = 0; k < cs.size(); ++k)
        {
            double const ci = loc[k].ci.g_per_kwh;
            EXPECT_NEAR(mkt.consumers[k].result.ci.g_per_kwh, ci, 1e-9 * ci);
            EXPECT_NEAR(mkt.consumers[k].result.cfe_kwh, loc[k].cfe_kwh, 1e-9 * std::max(1.0, loc[k].cfe_kwh));
        }
    }
}

TEST(Properties, MarketEmissionsSumToGridEmissions)
{
    // When consumers cover the whole grid, market-based totals match.
    gen::Rng rng(65);
    auto const reg = SourceRegistry::with_defaults();
    for (int i = 0; i < 200; ++i)
    {
        auto const mix = gen::random_mix(rng, "g");
        double const wind = mix.energy_mwh("wind");
        double const total_kwh = mix.total_energy_mwh() * kKwhPerMwh;
        double const claim_mwh = wind * gen::uniform(rng, 0.0, 0.9);
        double const d1 = std::max(claim_mwh * kKwhPerMwh, total_kwh * gen::uniform(rng, 0.05, 0.6));
        std::vector<Consumer> cs{
            {"a", "g", d1, AccountingMethod::MarketBased},
            {"b", "g", total_kwh - d1, AccountingMethod::MarketBased},
        };
        std::vector<Contract> ks{{"k", "a", ContractKind::Rec, "wind", "g", {claim_mwh}}};
        auto const r = attribute_market_based({{"g", mix}}, ks, cs, reg);
        double const sum = r.consumers[0].result.emissions_g + r.consumers[1].result.emissions_g;
        double const grid = total_emissions_g(mix, reg);
        EXPECT_NEAR(sum, grid, 1e-9 * grid);
    }
}

TEST(Properties, DoubleCountingIsNonNegativeAndBounded)
{
    gen::Rng rng(66);
    auto const reg = SourceRegistry::with_defaults();
    for (int i = 0; i < 300; ++i)
    {
        auto const mix = gen::random_mix(rng, "g");
        std::vector<Contract> ks;
        auto const n = gen::index(rng, 0, 3);
        for (std::size_t k = 0; k < n; ++k)
        {
            ks.push_back({"k" + std::to_string(k), "a", ContractKind::PhysicalOffsite,
                          k % 2 ? "solar" : "wind", "g", {gen::uniform(rng, 0.0, 2000.0)}});
        }
        std::vector<Consumer> cs{
            {"a", "g", 10, AccountingMethod::MarketBased},
            {"b", "g", 10, gen::index(rng, 0, 1) ? AccountingMethod::LocationBased
                                                  : AccountingMethod::MarketBased},
        };
        double const dc = detect_double_counting(mix, ks, cs, reg, false);
        EXPECT_GE(dc, 0.0);
        EXPECT_LE(dc, carbon_free_energy_mwh(mix, reg) * (1 + 1e-12));
        EXPECT_EQ(detect_double_counting(mix, ks, cs, reg, true), 0.0);
        if (ks.empty() || cs[1].method == AccountingMethod::MarketBased)
        {
            EXPECT_EQ(dc, 0.0);
        }
        else
        {
            EXPECT_DOUBLE_EQ(dc, compute_residual_mix(mix, ks, reg).total_removed_mwh());
        }
    }
}
