#include "gridcarbon/stats.hpp"

#include "gridcarbon/error.hpp"

#include <algorithm>

namespace gridcarbon
{

namespace
{

void require_steps(RegionDataset const& dataset)
{
    if (dataset.series.empty())
    {
        throw Error(
            ErrorKind::EmptyDataset,
            "region '" + dataset.region + "' has no data"
        );
    }
}

} // namespace

PenetrationStat penetration(
    RegionDataset const& dataset,
    SourceRegistry const& sources,
    std::set<SourceCategory> const& categories,
    PenetrationMode mode
)
{
    require_steps(dataset);
    PenetrationStat stat;
    stat.region = dataset.region;
    double pct_sum = 0.0;
    std::size_t pct_count = 0;
    for (auto const& step : dataset.series.steps())
    {
        double total = 0.0;
        double selected = 0.0;
        for (auto const& [id, energy] : step.generation_mwh())
        {
            total += energy;
            if (categories.contains(sources.at(id).category))
            {
                selected += energy;
            }
        }
        stat.total_generation_mwh += total;
        stat.solar_wind_mwh += selected;
        if (total > 0.0)
        {
            pct_sum += 100.0 * selected / total;
            ++pct_count;
        }
    }
    if (stat.total_generation_mwh <= 0.0)
    {
        throw Error(
            ErrorKind::EmptyMix,
            "region '" + dataset.region + "' has no generation"
        );
    }
    stat.solar_wind_pct = mode == PenetrationMode::EnergyWeighted
        ? 100.0 * stat.solar_wind_mwh / stat.total_generation_mwh
        : pct_sum / static_cast<double>(pct_count);
    return stat;
}

std::vector<CdfPoint> empirical_cdf(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    std::vector<CdfPoint> cdf;
    double const n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        if (i + 1 < values.size() && values[i + 1] == values[i])
        {
            continue;
        }
        cdf.push_back({values[i], static_cast<double>(i + 1) / n});
    }
    return cdf;
}

FleetPenetration penetration_fleet(
    std::span<RegionDataset const> datasets,
    SourceRegistry const& sources,
    std::set<SourceCategory> const& categories,
    PenetrationMode mode
)
{
    if (datasets.empty())
    {
        throw Error(ErrorKind::EmptyFleet, "no regions supplied");
    }
    FleetPenetration fleet;
    std::vector<double> pcts;
    for (auto const& ds : datasets)
    {
        fleet.regions.push_back(penetration(ds, sources, categories, mode));
        pcts.push_back(fleet.regions.back().solar_wind_pct);
    }
    fleet.cdf = empirical_cdf(std::move(pcts));
    return fleet;
}

InflationResult residual_inflation(
    RegionDataset const& dataset,
    CategoryFractions const& fractions,
    SourceRegistry const& sources,
    EmissionsBasis basis
)
{
    require_steps(dataset);
    if (basis == EmissionsBasis::Automatic)
    {
        bool all_registered = true;
        for (auto const& step : dataset.series.steps())
        {
            for (auto const& [id, e] : step.generation_mwh())
            {
                all_registered = all_registered && sources.contains(id);
            }
        }
        basis = all_registered || !dataset.published_ci
            ? EmissionsBasis::Registry
            : EmissionsBasis::PublishedCi;
    }
    if (basis == EmissionsBasis::PublishedCi
        && (!dataset.published_ci
            || dataset.published_ci->size() != dataset.series.size()))
    {
        throw Error(
            ErrorKind::SchemaError,
            "region '" + dataset.region + "' has no aligned published CI"
        );
    }

    InflationResult out;
    out.region = dataset.region;
    double emissions_g = 0.0;
    double residual_emissions_g = 0.0;
    double residual_mwh = 0.0;
    for (std::size_t i = 0; i < dataset.series.size(); ++i)
    {
        auto const& step = dataset.series[i];
        double const total = step.total_energy_mwh();
        if (total <= 0.0)
        {
            continue;
        }
        auto const contracts = make_fraction_contracts(step, fractions, sources);
        auto const residual = compute_residual_mix(step, contracts, sources);
        double const remaining = residual.mix.total_energy_mwh();
        if (remaining <= 0.0)
        {
            throw Error(
                ErrorKind::EmptyResidual,
                "region '" + dataset.region + "': step " + std::to_string(i)
                    + " is fully contracted"
            );
        }
        out.total_generation_mwh += total;
        out.contracted_mwh += residual.total_removed_mwh();
        residual_mwh += remaining;
        if (basis == EmissionsBasis::Registry)
        {
            emissions_g += total_emissions_g(step, sources);
            residual_emissions_g += total_emissions_g(residual.mix, sources);
        }
        else
        {
            // Contracted energy is carbon free, so it carries no emissions.
            double const g = (*dataset.published_ci)[i] * total * kKwhPerMwh;
            emissions_g += g;
            residual_emissions_g += g;
        }
    }
    if (out.total_generation_mwh <= 0.0)
    {
        throw Error(
            ErrorKind::EmptyMix,
            "region '" + dataset.region + "' has no generation"
        );
    }
    out.ci_loc = {emissions_g / (out.total_generation_mwh * kKwhPerMwh)};
    out.ci_res = {residual_emissions_g / (residual_mwh * kKwhPerMwh)};
    out.increase_pct = out.ci_loc.g_per_kwh > 0.0
        ? 100.0 * (out.ci_res.g_per_kwh - out.ci_loc.g_per_kwh)
            / out.ci_loc.g_per_kwh
        : 0.0;
    return out;
}

} // namespace gridcarbon
