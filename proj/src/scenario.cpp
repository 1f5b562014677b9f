#include "gridcarbon/scenario.hpp"

#include "gridcarbon/error.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace gridcarbon
{

namespace
{

using nlohmann::json;

[[noreturn]] void invalid(std::string const& path, std::string const& why)
{
    throw Error(ErrorKind::ScenarioInvalid, path + ": " + why);
}

void reject_unknown_keys(
    json const& obj,
    std::string const& path,
    std::set<std::string> const& allowed
)
{
    for (auto const& [key, value] : obj.items())
    {
        if (!allowed.contains(key))
        {
            invalid(path + "." + key, "unknown field");
        }
    }
}

json const& require(json const& obj, std::string const& path, char const* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
    {
        invalid(path + "." + key, "required field is missing");
    }
    return *it;
}

std::string as_string(json const& v, std::string const& path)
{
    if (!v.is_string())
    {
        invalid(path, "expected a string");
    }
    auto s = v.get<std::string>();
    if (s.empty())
    {
        invalid(path, "must not be empty");
    }
    return s;
}

double as_non_negative(json const& v, std::string const& path)
{
    if (!v.is_number())
    {
        invalid(path, "expected a number");
    }
    double const d = v.get<double>();
    if (!std::isfinite(d) || d < 0.0)
    {
        invalid(path, "must be a non-negative number");
    }
    return d;
}

json parse_json_or_throw(std::string_view text)
{
    try
    {
        return json::parse(text);
    }
    catch (json::parse_error const& e)
    {
        invalid("$", std::string("malformed JSON: ") + e.what());
    }
}

json const& as_array(json const& v, std::string const& path)
{
    if (!v.is_array())
    {
        invalid(path, "expected an array");
    }
    return v;
}

void parse_sources(json const& arr, Scenario& s)
{
    for (std::size_t i = 0; i < arr.size(); ++i)
    {
        std::string const path = "sources[" + std::to_string(i) + "]";
        auto const& obj = arr[i];
        if (!obj.is_object())
        {
            invalid(path, "expected an object");
        }
        reject_unknown_keys(obj, path, {"id", "category", "cef", "carbon_free"});
        EnergySource src;
        src.id = as_string(require(obj, path, "id"), path + ".id");
        auto const cat_name
            = as_string(require(obj, path, "category"), path + ".category");
        auto const cat = parse_category(cat_name);
        if (!cat)
        {
            invalid(path + ".category", "unknown category '" + cat_name + "'");
        }
        src.category = *cat;
        auto const defaults = default_for(*cat);
        src.cef_g_per_kwh = obj.contains("cef")
            ? as_non_negative(obj["cef"], path + ".cef")
            : defaults.cef_g_per_kwh;
        if (obj.contains("carbon_free"))
        {
            if (!obj["carbon_free"].is_boolean())
            {
                invalid(path + ".carbon_free", "expected a boolean");
            }
            src.carbon_free = obj["carbon_free"].get<bool>();
        }
        else
        {
            src.carbon_free = defaults.carbon_free;
        }
        if (src.carbon_free && src.cef_g_per_kwh != 0.0)
        {
            invalid(path + ".cef", "carbon-free sources must have CEF 0");
        }
        s.sources.add_or_replace(src);
    }
}

void parse_regions(json const& arr, Scenario& s)
{
    for (std::size_t i = 0; i < arr.size(); ++i)
    {
        std::string const path = "regions[" + std::to_string(i) + "]";
        auto const& obj = arr[i];
        if (!obj.is_object())
        {
            invalid(path, "expected an object");
        }
        reject_unknown_keys(obj, path, {"id", "grid_demand_mwh", "generation_mwh"});
        auto id = as_string(require(obj, path, "id"), path + ".id");
        if (s.regions.contains(id))
        {
            invalid(path + ".id", "duplicate region '" + id + "'");
        }
        auto const& gen = require(obj, path, "generation_mwh");
        if (!gen.is_object())
        {
            invalid(path + ".generation_mwh", "expected an object");
        }
        EnergyBySource generation;
        for (auto const& [source, value] : gen.items())
        {
            std::string const vpath = path + ".generation_mwh." + source;
            generation[source] = as_non_negative(value, vpath);
            if (!s.sources.contains(source))
            {
                invalid(vpath, "unknown source '" + source + "'");
            }
        }
        if (obj.contains("grid_demand_mwh"))
        {
            s.grid_demand_mwh[id]
                = as_non_negative(obj["grid_demand_mwh"], path + ".grid_demand_mwh");
        }
        s.regions.emplace(id, GridMix(id, std::move(generation)));
    }
}

// `regions` is null when consumers are parsed without a scenario.
void parse_consumers(
    json const& arr,
    std::vector<Consumer>& out,
    MixesByRegion const* regions
)
{
    std::set<std::string> seen;
    for (std::size_t i = 0; i < arr.size(); ++i)
    {
        std::string const path = "consumers[" + std::to_string(i) + "]";
        auto const& obj = arr[i];
        if (!obj.is_object())
        {
            invalid(path, "expected an object");
        }
        reject_unknown_keys(obj, path, {"id", "region", "demand_kwh", "method"});
        Consumer c;
        c.id = as_string(require(obj, path, "id"), path + ".id");
        if (!seen.insert(c.id).second)
        {
            invalid(path + ".id", "duplicate consumer '" + c.id + "'");
        }
        c.region = as_string(require(obj, path, "region"), path + ".region");
        if (regions && !regions->contains(c.region))
        {
            invalid(path + ".region", "unknown region '" + c.region + "'");
        }
        c.demand_kwh
            = as_non_negative(require(obj, path, "demand_kwh"), path + ".demand_kwh");
        if (obj.contains("method"))
        {
            auto const name = as_string(obj["method"], path + ".method");
            auto const m = parse_method(name);
            if (!m)
            {
                invalid(path + ".method", "unknown method '" + name + "'");
            }
            c.method = *m;
        }
        out.push_back(std::move(c));
    }
}

void parse_contracts(json const& arr, std::vector<Contract>& out, bool allow_series)
{
    for (std::size_t i = 0; i < arr.size(); ++i)
    {
        std::string const path = "contracts[" + std::to_string(i) + "]";
        auto const& obj = arr[i];
        if (!obj.is_object())
        {
            invalid(path, "expected an object");
        }
        reject_unknown_keys(
            obj,
            path,
            {"id", "buyer", "kind", "source", "source_region", "energy_mwh"}
        );
        Contract c;
        c.id = as_string(require(obj, path, "id"), path + ".id");
        c.buyer = as_string(require(obj, path, "buyer"), path + ".buyer");
        auto const kind_name = as_string(require(obj, path, "kind"), path + ".kind");
        auto const kind = parse_contract_kind(kind_name);
        if (!kind)
        {
            invalid(path + ".kind", "unknown contract kind '" + kind_name + "'");
        }
        c.kind = *kind;
        c.source_id = as_string(require(obj, path, "source"), path + ".source");
        c.source_region = as_string(
            require(obj, path, "source_region"),
            path + ".source_region"
        );
        auto const& energy = require(obj, path, "energy_mwh");
        if (energy.is_array() && allow_series)
        {
            if (energy.empty())
            {
                invalid(path + ".energy_mwh", "must not be empty");
            }
            for (std::size_t k = 0; k < energy.size(); ++k)
            {
                c.energy_mwh.push_back(as_non_negative(
                    energy[k],
                    path + ".energy_mwh[" + std::to_string(k) + "]"
                ));
            }
        }
        else
        {
            c.energy_mwh = {as_non_negative(energy, path + ".energy_mwh")};
        }
        out.push_back(std::move(c));
    }
}

// Regions, consumers and contracts re-checked against each other; also used
// for scenarios built in code rather than parsed.
void cross_check(Scenario const& s)
{
    if (s.regions.empty())
    {
        invalid("regions", "at least one region is required");
    }
    for (auto const& [id, mix] : s.regions)
    {
        for (auto const& [source, e] : mix.generation_mwh())
        {
            if (!s.sources.contains(source))
            {
                invalid(
                    "regions." + id + ".generation_mwh." + source,
                    "unknown source"
                );
            }
        }
    }
    std::map<std::string, std::string, std::less<>> consumer_region;
    for (std::size_t i = 0; i < s.consumers.size(); ++i)
    {
        auto const& c = s.consumers[i];
        std::string const path = "consumers[" + std::to_string(i) + "]";
        if (!s.regions.contains(c.region))
        {
            invalid(path + ".region", "unknown region '" + c.region + "'");
        }
        if (!std::isfinite(c.demand_kwh) || c.demand_kwh < 0.0)
        {
            invalid(path + ".demand_kwh", "must be a non-negative number");
        }
        if (!consumer_region.emplace(c.id, c.region).second)
        {
            invalid(path + ".id", "duplicate consumer '" + c.id + "'");
        }
    }
    std::set<std::string> contract_ids;
    for (std::size_t i = 0; i < s.contracts.size(); ++i)
    {
        auto const& c = s.contracts[i];
        std::string const path = "contracts[" + std::to_string(i) + "]";
        if (!contract_ids.insert(c.id).second)
        {
            invalid(path + ".id", "duplicate contract '" + c.id + "'");
        }
        auto buyer = consumer_region.find(c.buyer);
        if (buyer == consumer_region.end())
        {
            invalid(path + ".buyer", "unknown consumer '" + c.buyer + "'");
        }
        if (!s.regions.contains(c.source_region))
        {
            invalid(
                path + ".source_region",
                "unknown region '" + c.source_region + "'"
            );
        }
        if (c.energy_mwh.size() != 1)
        {
            invalid(path + ".energy_mwh", "scenarios take a single value");
        }
        try
        {
            validate_contract(c, s.sources, buyer->second);
        }
        catch (Error const& e)
        {
            invalid(path, e.what());
        }
    }
}

// The toy grid: 1000 MWh split evenly between wind and coal (1000 g/kWh),
// with two 20 kWh homes.
constexpr std::string_view kResidentialCase1 = R"({
  "name": "residential-case-1",
  "description": "Two passive homes on a 50/50 wind/coal grid; no contracts.",
  "regions": [
    {"id": "toy", "grid_demand_mwh": 1000,
     "generation_mwh": {"wind": 500, "coal": 500}}
  ],
  "consumers": [
    {"id": "H1", "region": "toy", "demand_kwh": 20, "method": "location_based"},
    {"id": "H2", "region": "toy", "demand_kwh": 20, "method": "market_based"}
  ],
  "contracts": []
})";

// H2's 10 kWh in-front-of-the-meter array adds 0.01 MWh of solar; coal stays
// at 500 MWh so the residual mix is still an even wind/coal split.
constexpr std::string_view kResidentialCase2 = R"({
  "name": "residential-case-2",
  "description": "H2 installs a 10 kWh front-of-meter solar array and claims it.",
  "sources": [
    {"id": "h2_rooftop_solar", "category": "solar"}
  ],
  "regions": [
    {"id": "toy", "grid_demand_mwh": 1000,
     "generation_mwh": {"wind": 500, "h2_rooftop_solar": 0.01, "coal": 500}}
  ],
  "consumers": [
    {"id": "H1", "region": "toy", "demand_kwh": 20, "method": "location_based"},
    {"id": "H2", "region": "toy", "demand_kwh": 20, "method": "market_based"}
  ],
  "contracts": [
    {"id": "h2-onsite", "buyer": "H2", "kind": "physical_onsite",
     "source": "h2_rooftop_solar", "source_region": "toy", "energy_mwh": 0.01}
  ]
})";

constexpr std::string_view kResidentialCase3 = R"({
  "name": "residential-case-3",
  "description": "H2 sells the RECs of its solar array to H1.",
  "sources": [
    {"id": "h2_rooftop_solar", "category": "solar"}
  ],
  "regions": [
    {"id": "toy", "grid_demand_mwh": 1000,
     "generation_mwh": {"wind": 500, "h2_rooftop_solar": 0.01, "coal": 500}}
  ],
  "consumers": [
    {"id": "H1", "region": "toy", "demand_kwh": 20, "method": "market_based"},
    {"id": "H2", "region": "toy", "demand_kwh": 20, "method": "market_based"}
  ],
  "contracts": [
    {"id": "h2-rec-to-h1", "buyer": "H1", "kind": "rec",
     "source": "h2_rooftop_solar", "source_region": "toy", "energy_mwh": 0.01}
  ]
})";

constexpr std::string_view kCommercialCase1 = R"({
  "name": "commercial-case-1",
  "description": "A 20 MWh data center and a home on the toy grid; no contracts.",
  "regions": [
    {"id": "toy", "grid_demand_mwh": 1000,
     "generation_mwh": {"wind": 500, "coal": 500}}
  ],
  "consumers": [
    {"id": "C1", "region": "toy", "demand_kwh": 20000, "method": "market_based"},
    {"id": "H1", "region": "toy", "demand_kwh": 20, "method": "location_based"}
  ],
  "contracts": []
})";

// Demand stays at 1000 MWh, so the new 20 MWh solar farm displaces coal
// (500 -> 480 MWh). The displacement is stated here, never inferred.
constexpr std::string_view kCommercialCase2 = R"({
  "name": "commercial-case-2",
  "description": "C1 signs a physical PPA for a 20 MWh offsite solar farm on the same grid.",
  "regions": [
    {"id": "toy", "grid_demand_mwh": 1000,
     "generation_mwh": {"wind": 500, "solar": 20, "coal": 480}}
  ],
  "consumers": [
    {"id": "C1", "region": "toy", "demand_kwh": 20000, "method": "market_based"},
    {"id": "H1", "region": "toy", "demand_kwh": 20, "method": "location_based"}
  ],
  "contracts": [
    {"id": "c1-ppa", "buyer": "C1", "kind": "physical_offsite",
     "source": "solar", "source_region": "toy", "energy_mwh": 20}
  ]
})";

constexpr std::string_view kCommercialCase3 = R"({
  "name": "commercial-case-3",
  "description": "C1 signs a financial PPA for a 20 MWh solar farm on a remote grid.",
  "regions": [
    {"id": "toy", "grid_demand_mwh": 1000,
     "generation_mwh": {"wind": 500, "coal": 500}},
    {"id": "remote", "grid_demand_mwh": 1000,
     "generation_mwh": {"solar": 20, "wind": 480, "coal": 500}}
  ],
  "consumers": [
    {"id": "C1", "region": "toy", "demand_kwh": 20000, "method": "market_based"},
    {"id": "H1", "region": "toy", "demand_kwh": 20, "method": "location_based"},
    {"id": "R1", "region": "remote", "demand_kwh": 20, "method": "market_based"}
  ],
  "contracts": [
    {"id": "c1-financial-ppa", "buyer": "C1", "kind": "financial",
     "source": "solar", "source_region": "remote", "energy_mwh": 20}
  ]
})";

constexpr std::pair<std::string_view, std::string_view> kBuiltins[] = {
    {"residential-case-1", kResidentialCase1},
    {"residential-case-2", kResidentialCase2},
    {"residential-case-3", kResidentialCase3},
    {"commercial-case-1", kCommercialCase1},
    {"commercial-case-2", kCommercialCase2},
    {"commercial-case-3", kCommercialCase3},
};

} // namespace

Scenario parse_scenario(std::string_view json_text)
{
    auto const doc = parse_json_or_throw(json_text);
    if (!doc.is_object())
    {
        invalid("$", "expected a JSON object");
    }
    reject_unknown_keys(
        doc,
        "$",
        {"name",
         "description",
         "sources",
         "cef_overrides",
         "regions",
         "consumers",
         "contracts",
         "public_signal_adjusted"}
    );

    Scenario s;
    s.sources = SourceRegistry::with_defaults();
    s.name = doc.contains("name") ? as_string(doc["name"], "name") : "scenario";
    if (doc.contains("description"))
    {
        if (!doc["description"].is_string())
        {
            invalid("description", "expected a string");
        }
        s.description = doc["description"].get<std::string>();
    }
    if (doc.contains("sources"))
    {
        parse_sources(as_array(doc["sources"], "sources"), s);
    }
    if (doc.contains("cef_overrides"))
    {
        auto const& obj = doc["cef_overrides"];
        if (!obj.is_object())
        {
            invalid("cef_overrides", "expected an object");
        }
        std::map<std::string, double> overrides;
        for (auto const& [key, value] : obj.items())
        {
            overrides[key] = as_non_negative(value, "cef_overrides." + key);
        }
        try
        {
            s.sources.apply_cef_overrides(overrides);
        }
        catch (Error const& e)
        {
            invalid("cef_overrides", e.what());
        }
    }
    parse_regions(as_array(require(doc, "$", "regions"), "regions"), s);
    if (doc.contains("consumers"))
    {
        parse_consumers(as_array(doc["consumers"], "consumers"), s.consumers, &s.regions);
    }
    if (doc.contains("contracts"))
    {
        parse_contracts(as_array(doc["contracts"], "contracts"), s.contracts, false);
    }
    if (doc.contains("public_signal_adjusted"))
    {
        if (!doc["public_signal_adjusted"].is_boolean())
        {
            invalid("public_signal_adjusted", "expected a boolean");
        }
        s.public_signal_adjusted = doc["public_signal_adjusted"].get<bool>();
    }
    cross_check(s);
    return s;
}

Scenario load_scenario_file(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw Error(ErrorKind::Io, "cannot open scenario file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

Parties parse_parties(std::string_view json_text)
{
    auto const doc = parse_json_or_throw(json_text);
    if (!doc.is_object())
    {
        invalid("$", "expected a JSON object");
    }
    reject_unknown_keys(doc, "$", {"consumers", "contracts"});
    Parties p;
    parse_consumers(
        as_array(require(doc, "$", "consumers"), "consumers"),
        p.consumers,
        nullptr
    );
    if (doc.contains("contracts"))
    {
        parse_contracts(as_array(doc["contracts"], "contracts"), p.contracts, true);
    }
    return p;
}

std::vector<Contract> parse_contract_list(std::string_view json_text)
{
    auto const doc = parse_json_or_throw(json_text);
    std::vector<Contract> out;
    if (doc.is_array())
    {
        parse_contracts(doc, out, true);
    }
    else if (doc.is_object())
    {
        reject_unknown_keys(doc, "$", {"contracts"});
        parse_contracts(as_array(require(doc, "$", "contracts"), "contracts"), out, true);
    }
    else
    {
        invalid("$", "expected an array of contracts");
    }
    return out;
}

std::vector<std::string> builtin_scenario_names()
{
    std::vector<std::string> names;
    for (auto const& [name, text] : kBuiltins)
    {
        names.emplace_back(name);
    }
    return names;
}

std::string_view builtin_scenario_json(std::string_view name)
{
    for (auto const& [n, text] : kBuiltins)
    {
        if (n == name)
        {
            return text;
        }
    }
    throw Error(
        ErrorKind::ScenarioInvalid,
        "unknown built-in scenario '" + std::string(name) + "'"
    );
}

Scenario builtin_scenario(std::string_view name)
{
    return parse_scenario(builtin_scenario_json(name));
}

ConsumerReport const& AttributionReport::consumer(std::string_view id) const
{
    for (auto const& c : consumers)
    {
        if (c.id == id)
        {
            return c;
        }
    }
    throw Error(
        ErrorKind::ScenarioInvalid,
        "report has no consumer '" + std::string(id) + "'"
    );
}

RegionReport const& AttributionReport::region(std::string_view id) const
{
    for (auto const& r : regions)
    {
        if (r.region == id)
        {
            return r;
        }
    }
    throw Error(
        ErrorKind::ScenarioInvalid,
        "report has no region '" + std::string(id) + "'"
    );
}

void validate_scenario(Scenario const& scenario)
{
    cross_check(scenario);
}

AttributionReport run_scenario(Scenario const& scenario)
{
    validate_scenario(scenario);

    AttributionReport report;
    report.scenario = scenario.name;
    report.public_signal_adjusted = scenario.public_signal_adjusted;

    auto const market = attribute_market_based(
        scenario.regions,
        scenario.contracts,
        scenario.consumers,
        scenario.sources
    );

    for (auto const& [id, mix] : scenario.regions)
    {
        auto const& rr = market.regions.at(id);
        RegionReport r;
        r.region = id;
        r.generation_mwh = mix.total_energy_mwh();
        if (auto it = scenario.grid_demand_mwh.find(id);
            it != scenario.grid_demand_mwh.end())
        {
            r.grid_demand_mwh = it->second;
        }
        r.cfe_share = carbon_free_share(mix, scenario.sources);
        r.ci_loc = rr.ci_loc;
        r.ci_res = rr.ci_res;
        r.residual_cfe_share = rr.residual_cfe_share;
        r.contracted_mwh = rr.residual.total_removed_mwh();
        r.over_contracted = rr.residual.over_contracted;
        r.double_counted_cfe_mwh = detect_double_counting(
            mix,
            scenario.contracts,
            scenario.consumers,
            scenario.sources,
            scenario.public_signal_adjusted
        );
        report.double_counted_cfe_mwh += r.double_counted_cfe_mwh;
        report.regions.push_back(std::move(r));
    }

    for (std::size_t i = 0; i < scenario.consumers.size(); ++i)
    {
        auto const& consumer = scenario.consumers[i];
        auto const location = attribute_location_based(
            scenario.regions.at(consumer.region),
            std::span(&consumer, 1),
            scenario.sources
        );
        ConsumerReport c;
        c.id = consumer.id;
        c.region = consumer.region;
        c.demand_kwh = consumer.demand_kwh;
        c.method = consumer.method;
        c.location = location.front();
        c.market = market.consumers[i].result;
        c.claimed_cfe_kwh = market.consumers[i].claimed_cfe_kwh;
        c.over_claimed = market.consumers[i].over_claimed;
        report.consumers.push_back(std::move(c));
    }
    return report;
}

} // namespace gridcarbon
