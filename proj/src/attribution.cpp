#include "gridcarbon/attribution.hpp"

#include "gridcarbon/error.hpp"

#include <algorithm>
#include <cmath>

namespace gridcarbon
{

namespace
{

void check_demand(Consumer const& consumer)
{
    if (!std::isfinite(consumer.demand_kwh) || consumer.demand_kwh < 0.0)
    {
        throw Error(
            ErrorKind::ScenarioInvalid,
            "consumer '" + consumer.id + "': demand must be non-negative"
        );
    }
}

} // namespace

std::string_view to_string(AccountingMethod method)
{
    return method == AccountingMethod::MarketBased ? "market_based"
                                                   : "location_based";
}

std::optional<AccountingMethod> parse_method(std::string_view name)
{
    if (name == "location_based" || name == "location-based"
        || name == "location")
    {
        return AccountingMethod::LocationBased;
    }
    if (name == "market_based" || name == "market-based" || name == "market")
    {
        return AccountingMethod::MarketBased;
    }
    return std::nullopt;
}

std::vector<MethodResult> attribute_location_based(
    GridMix const& mix,
    std::span<Consumer const> consumers,
    SourceRegistry const& sources
)
{
    auto const ci = compute_average_ci(mix, sources);
    double const share = carbon_free_share(mix, sources);
    std::vector<MethodResult> out;
    out.reserve(consumers.size());
    for (auto const& consumer : consumers)
    {
        check_demand(consumer);
        MethodResult r;
        r.cfe_kwh = consumer.demand_kwh * share;
        r.fossil_kwh = consumer.demand_kwh - r.cfe_kwh;
        r.ci = ci;
        r.emissions_g = consumer.demand_kwh * ci.g_per_kwh;
        out.push_back(r);
    }
    return out;
}

CarbonIntensity
compute_market_ci(double demand_kwh, double claim_kwh, CarbonIntensity ci_res)
{
    if (!(demand_kwh > 0.0))
    {
        throw Error(
            ErrorKind::ZeroDemand,
            "market-based CI needs a positive demand"
        );
    }
    if (!(claim_kwh >= 0.0))
    {
        throw Error(
            ErrorKind::ClaimExceedsDemand,
            "carbon-free claim must be non-negative"
        );
    }
    if (claim_kwh > demand_kwh)
    {
        throw Error(
            ErrorKind::ClaimExceedsDemand,
            "carbon-free claim exceeds demand"
        );
    }
    return {(demand_kwh - claim_kwh) * ci_res.g_per_kwh / demand_kwh};
}

MarketBasedResult attribute_market_based(
    MixesByRegion const& mixes,
    std::span<Contract const> contracts,
    std::span<Consumer const> consumers,
    SourceRegistry const& sources
)
{
    for (auto const& c : contracts)
    {
        if (!mixes.contains(c.source_region))
        {
            throw Error(
                ErrorKind::InvalidContract,
                "contract '" + c.id + "': no mix for source region '"
                    + c.source_region + "'"
            );
        }
    }

    MarketBasedResult out;
    for (auto const& [region, mix] : mixes)
    {
        RegionResidual rr;
        rr.residual = compute_residual_mix(mix, contracts, sources);
        rr.ci_loc = compute_average_ci(mix, sources);
        rr.ci_res = residual_ci(rr.residual, sources);
        rr.residual_cfe_share = carbon_free_share(rr.residual.mix, sources);
        out.regions.emplace(region, std::move(rr));
    }

    out.consumers.reserve(consumers.size());
    for (auto const& consumer : consumers)
    {
        check_demand(consumer);
        auto it = out.regions.find(consumer.region);
        if (it == out.regions.end())
        {
            throw Error(
                ErrorKind::ScenarioInvalid,
                "consumer '" + consumer.id + "': unknown region '"
                    + consumer.region + "'"
            );
        }
        auto const& home = it->second;

        double claim_mwh = 0.0;
        for (auto const& c : contracts)
        {
            if (c.buyer == consumer.id)
            {
                claim_mwh += out.regions.at(c.source_region)
                                 .residual.delivered_mwh.at(c.id);
            }
        }

        MarketAttribution ma;
        double const demand = consumer.demand_kwh;
        double claim = claim_mwh * kKwhPerMwh;
        if (claim > demand)
        {
            ma.over_claimed = true;
            claim = demand;
        }
        ma.claimed_cfe_kwh = claim;
        if (demand > 0.0)
        {
            ma.result.ci = compute_market_ci(demand, claim, home.ci_res);
            ma.result.cfe_kwh
                = claim + (demand - claim) * home.residual_cfe_share;
        }
        else
        {
            ma.result.ci = home.ci_res;
        }
        ma.result.fossil_kwh = demand - ma.result.cfe_kwh;
        ma.result.emissions_g = demand * ma.result.ci.g_per_kwh;
        out.consumers.push_back(ma);
    }
    return out;
}

double detect_double_counting(
    GridMix const& mix,
    std::span<Contract const> contracts,
    std::span<Consumer const> consumers,
    SourceRegistry const& sources,
    bool public_signal_adjusted
)
{
    if (public_signal_adjusted)
    {
        return 0.0;
    }
    bool const has_location_reader = std::any_of(
        consumers.begin(),
        consumers.end(),
        [&](Consumer const& c) {
            return c.region == mix.region()
                && c.method == AccountingMethod::LocationBased;
        }
    );
    if (!has_location_reader)
    {
        return 0.0;
    }
    return compute_residual_mix(mix, contracts, sources).total_removed_mwh();
}

} // namespace gridcarbon
