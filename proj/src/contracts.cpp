#include "gridcarbon/contracts.hpp"

#include "gridcarbon/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gridcarbon
{

namespace
{

constexpr std::pair<ContractKind, std::string_view> kKindNames[] = {
    {ContractKind::PhysicalOnsite, "physical_onsite"},
    {ContractKind::PhysicalOffsite, "physical_offsite"},
    {ContractKind::Financial, "financial"},
    {ContractKind::Rec, "rec"},
};

[[noreturn]] void bad_contract(Contract const& c, std::string const& why)
{
    throw Error(ErrorKind::InvalidContract, "contract '" + c.id + "': " + why);
}

} // namespace

std::string_view to_string(ContractKind kind)
{
    for (auto const& [k, name] : kKindNames)
    {
        if (k == kind)
        {
            return name;
        }
    }
    return "unknown";
}

std::optional<ContractKind> parse_contract_kind(std::string_view name)
{
    std::string normalized(name);
    std::replace(normalized.begin(), normalized.end(), '-', '_');
    for (auto const& [k, n] : kKindNames)
    {
        if (n == normalized)
        {
            return k;
        }
    }
    return std::nullopt;
}

double Contract::energy_at(std::size_t step) const
{
    if (energy_mwh.size() == 1)
    {
        return energy_mwh.front();
    }
    if (step >= energy_mwh.size())
    {
        bad_contract(
            *this,
            "no contracted energy for step " + std::to_string(step)
        );
    }
    return energy_mwh[step];
}

void validate_contract(
    Contract const& contract,
    SourceRegistry const& sources,
    std::optional<std::string_view> buyer_region
)
{
    if (contract.id.empty())
    {
        throw Error(ErrorKind::InvalidContract, "contract id must not be empty");
    }
    if (contract.energy_mwh.empty())
    {
        bad_contract(contract, "contracted energy is missing");
    }
    for (double e : contract.energy_mwh)
    {
        if (!std::isfinite(e) || e < 0.0)
        {
            bad_contract(contract, "contracted energy must be non-negative");
        }
    }
    auto const* source = sources.find(contract.source_id);
    if (source == nullptr)
    {
        throw Error(
            ErrorKind::UnknownSource,
            "contract '" + contract.id + "': unknown source '"
                + contract.source_id + "'"
        );
    }
    if (!source->carbon_free)
    {
        bad_contract(
            contract,
            "source '" + contract.source_id + "' is not carbon free"
        );
    }
    if (buyer_region && is_physical(contract.kind)
        && *buyer_region != contract.source_region)
    {
        bad_contract(
            contract,
            "physical contracts must be sourced in the buyer's region ('"
                + std::string(*buyer_region) + "')"
        );
    }
}

double ResidualMix::total_removed_mwh() const
{
    double total = 0.0;
    for (auto const& [id, e] : removed_mwh)
    {
        total += e;
    }
    return total;
}

ResidualMix compute_residual_mix(
    GridMix const& mix,
    std::span<Contract const> contracts,
    SourceRegistry const& sources,
    std::size_t step
)
{
    check_registered(mix, sources);

    // Sorted by id so the result does not depend on the input order.
    std::vector<Contract const*> local;
    for (auto const& c : contracts)
    {
        if (c.source_region == mix.region())
        {
            validate_contract(c, sources);
            local.push_back(&c);
        }
    }
    std::sort(
        local.begin(),
        local.end(),
        [](Contract const* a, Contract const* b) { return a->id < b->id; }
    );
    for (std::size_t i = 1; i < local.size(); ++i)
    {
        if (local[i]->id == local[i - 1]->id)
        {
            bad_contract(*local[i], "duplicate contract id");
        }
    }

    std::map<std::string, double, std::less<>> requested;
    for (auto const* c : local)
    {
        requested[c->source_id] += c->energy_at(step);
    }

    ResidualMix out;
    EnergyBySource generation = mix.generation_mwh();
    for (auto const& [source_id, want] : requested)
    {
        double const available = mix.energy_mwh(source_id);
        if (want > available)
        {
            out.removed_mwh[source_id] = available;
            out.over_contracted = true;
            out.over_contracted_sources.push_back(source_id);
            if (generation.contains(source_id))
            {
                generation[source_id] = 0.0;
            }
        }
        else
        {
            out.removed_mwh[source_id] = want;
            if (generation.contains(source_id))
            {
                generation[source_id] = available - want;
            }
        }
    }
    for (auto const* c : local)
    {
        double const want = requested[c->source_id];
        double const available = mix.energy_mwh(c->source_id);
        double const e = c->energy_at(step);
        out.delivered_mwh[c->id] = want > available ? e * (available / want) : e;
    }
    out.mix = GridMix(mix.region(), std::move(generation), mix.timestamp());
    return out;
}

CarbonIntensity
residual_ci(ResidualMix const& residual, SourceRegistry const& sources)
{
    if (residual.mix.total_energy_mwh() <= 0.0)
    {
        throw Error(
            ErrorKind::EmptyResidual,
            "region '" + residual.mix.region()
                + "': all generation is under contract"
        );
    }
    return compute_average_ci(residual.mix, sources);
}

CarbonIntensity compute_residual_ci(
    GridMix const& mix,
    std::span<Contract const> contracts,
    SourceRegistry const& sources,
    std::size_t step
)
{
    return residual_ci(compute_residual_mix(mix, contracts, sources, step), sources);
}

double contracted_cfe_for_buyer(
    std::span<Contract const> contracts,
    std::string_view buyer,
    std::size_t step,
    std::map<std::string, GridMix, std::less<>> const& mixes_by_region,
    SourceRegistry const& sources
)
{
    std::set<std::string, std::less<>> regions;
    for (auto const& c : contracts)
    {
        if (c.buyer == buyer)
        {
            regions.insert(c.source_region);
        }
    }
    double total = 0.0;
    for (auto const& region : regions)
    {
        auto it = mixes_by_region.find(region);
        if (it == mixes_by_region.end())
        {
            throw Error(
                ErrorKind::InvalidContract,
                "no generation mix for contract source region '" + region + "'"
            );
        }
        auto const residual
            = compute_residual_mix(it->second, contracts, sources, step);
        for (auto const& c : contracts)
        {
            if (c.buyer == buyer && c.source_region == region)
            {
                total += residual.delivered_mwh.at(c.id);
            }
        }
    }
    return total;
}

std::vector<Contract> make_fraction_contracts(
    GridMix const& mix,
    CategoryFractions const& fractions,
    SourceRegistry const& sources,
    std::string_view buyer
)
{
    for (auto const& [category, fraction] : fractions)
    {
        if (!std::isfinite(fraction) || fraction < 0.0 || fraction > 1.0)
        {
            throw Error(
                ErrorKind::InvalidContract,
                "contract fraction for '" + std::string(to_string(category))
                    + "' must lie in [0, 1]"
            );
        }
    }
    std::vector<Contract> out;
    for (auto const& [id, energy] : mix.generation_mwh())
    {
        auto const& source = sources.at(id);
        auto it = fractions.find(source.category);
        if (it == fractions.end() || it->second == 0.0)
        {
            continue;
        }
        if (!source.carbon_free)
        {
            throw Error(
                ErrorKind::InvalidContract,
                "cannot contract fossil source '" + id + "'"
            );
        }
        out.push_back(
            {"fraction:" + id,
             std::string(buyer),
             ContractKind::Financial,
             id,
             mix.region(),
             {it->second * energy}}
        );
    }
    return out;
}

} // namespace gridcarbon
