#include "gridcarbon/grid_model.hpp"

#include "gridcarbon/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace gridcarbon
{

namespace
{

struct CategoryInfo
{
    SourceCategory category;
    std::string_view name;
    CategoryDefaults defaults;
};

// gas, oil and biomass are IPCC AR5 median life-cycle values; unknown and
// other-fossil use a generic fossil figure.
constexpr CategoryInfo kCategoryTable[] = {
    {SourceCategory::Solar, "solar", {0.0, true}},
    {SourceCategory::Wind, "wind", {0.0, true}},
    {SourceCategory::Hydro, "hydro", {0.0, true}},
    {SourceCategory::Nuclear, "nuclear", {0.0, true}},
    {SourceCategory::Coal, "coal", {1000.0, false}},
    {SourceCategory::Gas, "gas", {490.0, false}},
    {SourceCategory::Oil, "oil", {650.0, false}},
    {SourceCategory::Biomass, "biomass", {230.0, false}},
    {SourceCategory::Geothermal, "geothermal", {0.0, true}},
    {SourceCategory::Unknown, "unknown", {700.0, false}},
    {SourceCategory::OtherRenewable, "other-renewable", {0.0, true}},
    {SourceCategory::OtherFossil, "other-fossil", {700.0, false}},
};

CategoryInfo const& info(SourceCategory category)
{
    for (auto const& row : kCategoryTable)
    {
        if (row.category == category)
        {
            return row;
        }
    }
    throw Error(ErrorKind::InvalidSource, "unhandled source category");
}

} // namespace

std::string_view to_string(SourceCategory category)
{
    return info(category).name;
}

std::optional<SourceCategory> parse_category(std::string_view name)
{
    std::string normalized(name);
    std::replace(normalized.begin(), normalized.end(), '_', '-');
    std::transform(normalized.begin(), normalized.end(), normalized.begin(), [](unsigned char ch) {
        return static_cast<char>(std::tolower(ch));
    });
    for (auto const& row : kCategoryTable)
    {
        if (row.name == normalized)
        {
            return row.category;
        }
    }
    return std::nullopt;
}

CategoryDefaults default_for(SourceCategory category)
{
    return info(category).defaults;
}

void validate_source(EnergySource const& source)
{
    if (source.id.empty())
    {
        throw Error(ErrorKind::InvalidSource, "source id must not be empty");
    }
    if (!std::isfinite(source.cef_g_per_kwh) || source.cef_g_per_kwh < 0.0)
    {
        throw Error(
            ErrorKind::InvalidSource,
            "source '" + source.id + "': CEF must be a non-negative number"
        );
    }
    if (source.carbon_free && source.cef_g_per_kwh != 0.0)
    {
        throw Error(
            ErrorKind::InvalidSource,
            "source '" + source.id + "': carbon-free sources must have CEF 0"
        );
    }
}

SourceRegistry SourceRegistry::with_defaults()
{
    SourceRegistry registry;
    for (auto const& row : kCategoryTable)
    {
        registry.add(
            {std::string(row.name),
             row.category,
             row.defaults.cef_g_per_kwh,
             row.defaults.carbon_free}
        );
    }
    return registry;
}

void SourceRegistry::add(EnergySource source)
{
    validate_source(source);
    if (contains(source.id))
    {
        throw Error(
            ErrorKind::InvalidSource,
            "duplicate source id '" + source.id + "'"
        );
    }
    sources_.push_back(std::move(source));
}

void SourceRegistry::add_or_replace(EnergySource source)
{
    validate_source(source);
    for (auto& existing : sources_)
    {
        if (existing.id == source.id)
        {
            existing = std::move(source);
            return;
        }
    }
    sources_.push_back(std::move(source));
}

bool SourceRegistry::contains(std::string_view id) const
{
    return find(id) != nullptr;
}

EnergySource const* SourceRegistry::find(std::string_view id) const
{
    auto it = std::find_if(
        sources_.begin(),
        sources_.end(),
        [id](EnergySource const& s) { return s.id == id; }
    );
    return it == sources_.end() ? nullptr : &*it;
}

EnergySource const& SourceRegistry::at(std::string_view id) const
{
    if (auto const* source = find(id))
    {
        return *source;
    }
    throw Error(
        ErrorKind::UnknownSource,
        "unknown source '" + std::string(id) + "'"
    );
}

void SourceRegistry::apply_cef_overrides(
    std::map<std::string, double> const& overrides
)
{
    for (auto const& [key, cef] : overrides)
    {
        bool matched = false;
        auto const category = parse_category(key);
        for (auto& source : sources_)
        {
            if (source.id == key || (category && source.category == *category))
            {
                EnergySource updated = source;
                updated.cef_g_per_kwh = cef;
                validate_source(updated);
                source = updated;
                matched = true;
            }
        }
        if (!matched)
        {
            throw Error(
                ErrorKind::InvalidSource,
                "CEF override '" + key + "' matches no source or category"
            );
        }
    }
}

GridMix::GridMix(
    std::string region,
    EnergyBySource generation_mwh,
    std::optional<Timestamp> timestamp
)
    : region_(std::move(region)),
      timestamp_(timestamp),
      generation_(std::move(generation_mwh))
{
    for (auto const& [id, energy] : generation_)
    {
        if (!std::isfinite(energy) || energy < 0.0)
        {
            throw Error(
                ErrorKind::InvalidMix,
                "region '" + region_ + "': generation for '" + id
                    + "' must be a non-negative number"
            );
        }
    }
}

double GridMix::energy_mwh(std::string_view source_id) const
{
    auto it = generation_.find(source_id);
    return it == generation_.end() ? 0.0 : it->second;
}

double GridMix::total_energy_mwh() const
{
    double total = 0.0;
    for (auto const& [id, energy] : generation_)
    {
        total += energy;
    }
    return total;
}

MixTimeSeries::MixTimeSeries(std::string region, std::vector<GridMix> steps)
    : region_(std::move(region)), steps_(std::move(steps))
{
    for (std::size_t i = 0; i < steps_.size(); ++i)
    {
        auto const& step = steps_[i];
        if (step.region() != region_)
        {
            throw Error(
                ErrorKind::InvalidMix,
                "step " + std::to_string(i) + " belongs to region '"
                    + step.region() + "', expected '" + region_ + "'"
            );
        }
        if (i == 0)
        {
            continue;
        }
        auto const& prev = steps_[i - 1].timestamp();
        auto const& cur = step.timestamp();
        if (prev.has_value() != cur.has_value())
        {
            throw Error(
                ErrorKind::InvalidMix,
                "either every step or no step must carry a timestamp"
            );
        }
        if (cur && *cur <= *prev)
        {
            throw Error(
                ErrorKind::InvalidMix,
                "timestamps must be strictly increasing (step "
                    + std::to_string(i) + ")"
            );
        }
    }
}

bool MixTimeSeries::is_uniform() const
{
    if (steps_.size() < 3 || !steps_.front().timestamp())
    {
        return true;
    }
    auto const spacing = *steps_[1].timestamp() - *steps_[0].timestamp();
    for (std::size_t i = 2; i < steps_.size(); ++i)
    {
        if (*steps_[i].timestamp() - *steps_[i - 1].timestamp() != spacing)
        {
            return false;
        }
    }
    return true;
}

void check_registered(GridMix const& mix, SourceRegistry const& sources)
{
    for (auto const& [id, energy] : mix.generation_mwh())
    {
        if (!sources.contains(id))
        {
            throw Error(
                ErrorKind::UnknownSource,
                "region '" + mix.region() + "': unknown source '" + id + "'"
            );
        }
    }
}

double total_emissions_g(GridMix const& mix, SourceRegistry const& sources)
{
    double grams = 0.0;
    for (auto const& [id, energy] : mix.generation_mwh())
    {
        grams += energy * kKwhPerMwh * sources.at(id).cef_g_per_kwh;
    }
    return grams;
}

CarbonIntensity
compute_average_ci(GridMix const& mix, SourceRegistry const& sources)
{
    check_registered(mix, sources);
    double weighted = 0.0;
    double total = 0.0;
    for (auto const& [id, energy] : mix.generation_mwh())
    {
        if (energy > 0.0)
        {
            weighted += energy * sources.at(id).cef_g_per_kwh;
            total += energy;
        }
    }
    if (total <= 0.0)
    {
        throw Error(
            ErrorKind::EmptyMix,
            "region '" + mix.region()
                + "': carbon intensity is undefined for zero generation"
        );
    }
    return {weighted / total};
}

double carbon_free_energy_mwh(GridMix const& mix, SourceRegistry const& sources)
{
    double cfe = 0.0;
    for (auto const& [id, energy] : mix.generation_mwh())
    {
        if (sources.at(id).carbon_free)
        {
            cfe += energy;
        }
    }
    return cfe;
}

double carbon_free_share(GridMix const& mix, SourceRegistry const& sources)
{
    double const total = mix.total_energy_mwh();
    if (total <= 0.0)
    {
        throw Error(
            ErrorKind::EmptyMix,
            "region '" + mix.region() + "': no generation"
        );
    }
    return carbon_free_energy_mwh(mix, sources) / total;
}

} // namespace gridcarbon
