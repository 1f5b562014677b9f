#include "gridcarbon/contracts.hpp"

#include "support/expect_error.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace gridcarbon;

namespace
{

Contract solar(std::string id, double mwh, std::string region = "toy")
{
    return {std::move(id), "C1", ContractKind::PhysicalOffsite, "solar", std::move(region), {mwh}};
}

} // namespace

TEST(Contracts, ResidualAfterSolarPpa)
{
    auto const reg = SourceRegistry::with_defaults();
    GridMix mix("toy", {{"wind", 500}, {"solar", 20}, {"coal", 480}});
    std::vector<Contract> cs{solar("c1", 20)};
    auto const r = compute_residual_mix(mix, cs, reg);
    EXPECT_EQ(r.mix.energy_mwh("wind"), 500.0);
    EXPECT_EQ(r.mix.energy_mwh("solar"), 0.0);
    EXPECT_EQ(r.mix.energy_mwh("coal"), 480.0);
    EXPECT_FALSE(r.over_contracted);
    EXPECT_DOUBLE_EQ(residual_ci(r, reg).g_per_kwh, 480000.0 / 980.0);
}

TEST(Contracts, ResidualMixIsEquationTwo)
{
    // Residual CI equals total grams over energy left after contracting.
    auto const reg = SourceRegistry::with_defaults();
    GridMix mix("toy", {{"wind", 500}, {"coal", 500}});
    std::vector<Contract> cs{
        {"w", "C1", ContractKind::Financial, "wind", "toy", {250}},
    };
    EXPECT_DOUBLE_EQ(compute_residual_ci(mix, cs, reg).g_per_kwh, 500.0 * 1000.0 / 750.0);
}

TEST(Contracts, OverContractingClampsAndProrates)
{
    auto const reg = SourceRegistry::with_defaults();
    GridMix mix("toy", {{"solar", 30}, {"coal", 70}});
    std::vector<Contract> cs{solar("b", 40), solar("a", 20)};
    auto const r = compute_residual_mix(mix, cs, reg);
    EXPECT_TRUE(r.over_contracted);
    EXPECT_EQ(r.over_contracted_sources, std::vector<std::string>{"solar"});
    EXPECT_EQ(r.mix.energy_mwh("solar"), 0.0);
    EXPECT_DOUBLE_EQ(r.total_removed_mwh(), 30.0);
    EXPECT_DOUBLE_EQ(r.delivered_mwh.at("a"), 10.0);
    EXPECT_DOUBLE_EQ(r.delivered_mwh.at("b"), 20.0);
}

TEST(Contracts, ContractOrderDoesNotMatter)
{
    gen::Rng rng(21);
    auto const reg = SourceRegistry::with_defaults();
    for (int i = 0; i < 200; ++i)
    {
        auto const mix = gen::random_mix(rng, "toy");
        std::vector<Contract> cs;
        auto const n = gen::index(rng, 1, 6);
        for (std::size_t k = 0; k < n; ++k)
        {
            cs.push_back({"c" + std::to_string(k), "B", ContractKind::Rec,
                          gen::index(rng, 0, 1) ? "solar" : "wind", "toy",
                          {gen::uniform(rng, 0.0, 1200.0)}});
        }
        auto const a = compute_residual_mix(mix, cs, reg);
        std::shuffle(cs.begin(), cs.end(), rng);
        auto const b = compute_residual_mix(mix, cs, reg);
        EXPECT_EQ(a.mix, b.mix);
        EXPECT_EQ(a.delivered_mwh, b.delivered_mwh);
        EXPECT_EQ(a.over_contracted, b.over_contracted);
    }
}

TEST(Contracts, OtherRegionsAreIgnored)
{
    auto const reg = SourceRegistry::with_defaults();
    GridMix mix("toy", {{"wind", 500}, {"coal", 500}});
    std::vector<Contract> cs{
        {"f", "C1", ContractKind::Financial, "solar", "remote", {20}},
    };
    auto const r = compute_residual_mix(mix, cs, reg);
    EXPECT_EQ(r.mix, mix);
    EXPECT_EQ(r.total_removed_mwh(), 0.0);
}

TEST(Contracts, Validation)
{
    auto const reg = SourceRegistry::with_defaults();
    EXPECT_EQ(kind_of([&] { validate_contract(solar("x", -1), reg); }), ErrorKind::InvalidContract);
    EXPECT_EQ(kind_of([&] { validate_contract(solar("", 1), reg); }), ErrorKind::InvalidContract);
    Contract coal{"c", "C1", ContractKind::Rec, "coal", "toy", {1}};
    EXPECT_EQ(kind_of([&] { validate_contract(coal, reg); }), ErrorKind::InvalidContract);
    Contract ghost{"g", "C1", ContractKind::Rec, "fusion", "toy", {1}};
    EXPECT_EQ(kind_of([&] { validate_contract(ghost, reg); }), ErrorKind::UnknownSource);
    // Physical delivery must stay on the buyer's grid.
    EXPECT_EQ(
        kind_of([&] { validate_contract(solar("p", 1, "remote"), reg, "toy"); }),
        ErrorKind::InvalidContract
    );
    Contract fin{"f", "C1", ContractKind::Financial, "solar", "remote", {1}};
    EXPECT_NO_THROW(validate_contract(fin, reg, "toy"));
    std::vector<Contract> dup{solar("d", 1), solar("d", 2)};
    EXPECT_EQ(
        kind_of([&] { compute_residual_mix(GridMix("toy", {{"solar", 5}}), dup, reg); }),
        ErrorKind::InvalidContract
    );
}

TEST(Contracts, FullyContractedGridHasNoResidualCi)
{
    auto const reg = SourceRegistry::with_defaults();
    GridMix mix("toy", {{"solar", 10}});
    std::vector<Contract> cs{solar("all", 10)};
    EXPECT_EQ(kind_of([&] { compute_residual_ci(mix, cs, reg); }), ErrorKind::EmptyResidual);
}

TEST(Contracts, PerStepEnergy)
{
    auto const reg = SourceRegistry::with_defaults();
    Contract c{"s", "C1", ContractKind::PhysicalOffsite, "solar", "toy", {1, 2, 3}};
    EXPECT_EQ(c.energy_at(2), 3.0);
    EXPECT_EQ(kind_of([&] { (void)c.energy_at(3); }), ErrorKind::InvalidContract);
    Contract flat = solar("f", 4);
    EXPECT_EQ(flat.energy_at(99), 4.0);
}

TEST(Contracts, BuyerClaimAcrossRegions)
{
    auto const reg = SourceRegistry::with_defaults();
    std::map<std::string, GridMix, std::less<>> mixes{
        {"toy", GridMix("toy", {{"wind", 500}, {"coal", 500}})},
        {"remote", GridMix("remote", {{"solar", 20}, {"wind", 480}, {"coal", 500}})},
    };
    std::vector<Contract> cs{
        {"f", "C1", ContractKind::Financial, "solar", "remote", {20}},
        {"g", "C2", ContractKind::Rec, "wind", "toy", {5}},
    };
    EXPECT_DOUBLE_EQ(contracted_cfe_for_buyer(cs, "C1", 0, mixes, reg), 20.0);
    EXPECT_DOUBLE_EQ(contracted_cfe_for_buyer(cs, "C2", 0, mixes, reg), 5.0);
    EXPECT_DOUBLE_EQ(contracted_cfe_for_buyer(cs, "nobody", 0, mixes, reg), 0.0);
    mixes.erase("remote");
    EXPECT_EQ(
        kind_of([&] { contracted_cfe_for_buyer(cs, "C1", 0, mixes, reg); }),
        ErrorKind::InvalidContract
    );
}

TEST(Contracts, FractionContracts)
{
    auto const reg = SourceRegistry::with_defaults();
    GridMix mix("sa", {{"solar", 300}, {"wind", 360}, {"gas", 200}, {"hydro", 140}});
    auto const cs = make_fraction_contracts(mix, solar_wind_fraction(0.5), reg);
    auto const r = compute_residual_mix(mix, cs, reg);
    EXPECT_DOUBLE_EQ(r.mix.energy_mwh("solar"), 150.0);
    EXPECT_DOUBLE_EQ(r.mix.energy_mwh("wind"), 180.0);
    EXPECT_DOUBLE_EQ(r.mix.energy_mwh("hydro"), 140.0);
    EXPECT_FALSE(r.over_contracted);
}

TEST(Contracts, KindNames)
{
    for (auto k : {ContractKind::PhysicalOnsite, ContractKind::PhysicalOffsite,
                   ContractKind::Financial, ContractKind::Rec})
    {
        EXPECT_EQ(parse_contract_kind(to_string(k)), k);
    }
    EXPECT_EQ(parse_contract_kind("physical-onsite"), ContractKind::PhysicalOnsite);
    EXPECT_FALSE(parse_contract_kind("handshake").has_value());
}
