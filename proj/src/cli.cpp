#include "gridcarbon/cli.hpp"

#include "gridcarbon/attribution.hpp"
#include "gridcarbon/contracts.hpp"
#include "gridcarbon/error.hpp"
#include "gridcarbon/ingest.hpp"
#include "gridcarbon/records.hpp"
#include "gridcarbon/scenario.hpp"
#include "gridcarbon/scheduler.hpp"
#include "gridcarbon/stats.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace gridcarbon::cli
{

namespace fs = std::filesystem;

namespace
{

struct CommonOptions
{
    std::string format = "json-records";
    std::string out = "-";
    std::string cef;
};

struct LoadOptions
{
    std::string fill = "drop-row";
    bool strict = false;
};

void add_common(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("--format", o.format, "json-records | csv")
        ->check(CLI::IsMember({"json-records", "json", "csv"}));
    cmd->add_option("--out", o.out, "output path, '-' for stdout");
    cmd->add_option("--cef", o.cef, "CEF override table (JSON)");
}

void add_load(CLI::App* cmd, LoadOptions& o)
{
    cmd->add_option("--fill", o.fill, "missing cells: drop-row | zero-fill")
        ->check(CLI::IsMember({"drop-row", "zero-fill"}));
    cmd->add_flag("--strict", o.strict, "reject unevenly spaced timestamps");
}

void require_path(std::string const& path)
{
    std::error_code ec;
    if (!fs::exists(path, ec))
    {
        throw Error(ErrorKind::Io, "no such file or directory: " + path);
    }
}

std::string read_text(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw Error(ErrorKind::Io, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SourceRegistry make_registry(CommonOptions const& o)
{
    auto registry = SourceRegistry::with_defaults();
    std::string path = o.cef;
    if (path.empty())
    {
        if (char const* env = std::getenv(kCefTableEnv); env && *env)
        {
            path = env;
        }
    }
    if (!path.empty())
    {
        require_path(path);
        registry.apply_cef_overrides(load_cef_table(path));
    }
    return registry;
}

CsvSchemaOptions schema(LoadOptions const& o)
{
    CsvSchemaOptions s;
    s.fill = o.fill == "zero-fill" ? FillPolicy::ZeroFill : FillPolicy::DropRow;
    s.strict_spacing = o.strict;
    return s;
}

std::set<SourceCategory> parse_categories(std::string const& list)
{
    std::set<SourceCategory> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        auto cat = parse_category(item);
        if (!cat)
        {
            throw Error(ErrorKind::SchemaError, "unknown category '" + item + "'");
        }
        out.insert(*cat);
    }
    if (out.empty())
    {
        throw Error(ErrorKind::SchemaError, "no categories given");
    }
    return out;
}

CategoryFractions fractions_for(std::set<SourceCategory> const& cats, double f)
{
    CategoryFractions out;
    for (auto c : cats)
    {
        out[c] = f;
    }
    return out;
}

std::vector<RegionDataset> load_datasets(
    std::string const& path,
    CsvSchemaOptions const& options,
    SourceRegistry const& registry
)
{
    std::vector<RegionDataset> out;
    if (fs::is_directory(path))
    {
        for (auto& loaded : load_region_dir(path, options, registry))
        {
            out.push_back(std::move(loaded.dataset));
        }
    }
    else
    {
        out.push_back(load_region_csv(path, options, registry).dataset);
    }
    return out;
}

std::string join_hours(std::vector<std::size_t> const& hours)
{
    std::string s;
    for (std::size_t i = 0; i < hours.size(); ++i)
    {
        s += (i > 0 ? ";" : "") + std::to_string(hours[i]);
    }
    return s;
}

// How contracts are chosen for the ci and residual commands.
struct ContractSpec
{
    std::string mode = "none";
    double fraction = 1.0;
    std::string categories = "solar,wind";
};

std::function<std::vector<Contract>(GridMix const&)> contract_source(
    ContractSpec const& spec,
    SourceRegistry const& registry
)
{
    if (spec.mode == "none")
    {
        return [](GridMix const&) { return std::vector<Contract>{}; };
    }
    if (spec.mode == "all-solar-wind" || spec.mode == "fraction")
    {
        auto const fractions
            = fractions_for(parse_categories(spec.categories), spec.fraction);
        return [fractions, &registry](GridMix const& mix) {
            return make_fraction_contracts(mix, fractions, registry);
        };
    }
    require_path(spec.mode);
    auto contracts = parse_contract_list(read_text(spec.mode));
    return [contracts](GridMix const&) { return contracts; };
}

std::vector<Record> cmd_ci(
    std::string const& mix_path,
    ContractSpec const& spec,
    LoadOptions const& load,
    SourceRegistry const& registry
)
{
    auto const ds = load_region_csv(mix_path, schema(load), registry).dataset;
    auto const contracts_for = contract_source(spec, registry);
    bool const with_contracts = spec.mode != "none";

    std::vector<Record> out;
    double emissions = 0.0, energy = 0.0, residual_emissions = 0.0, residual_energy = 0.0;
    for (std::size_t i = 0; i < ds.series.size(); ++i)
    {
        auto const& step = ds.series[i];
        Record r;
        r.add("region", ds.region);
        r.add("timestamp", format_timestamp(*step.timestamp()));
        r.add("generation_mwh", step.total_energy_mwh());
        r.add("ci_loc", compute_average_ci(step, registry).g_per_kwh);
        emissions += total_emissions_g(step, registry);
        energy += step.total_energy_mwh();
        if (with_contracts)
        {
            auto const contracts = contracts_for(step);
            auto const residual = compute_residual_mix(step, contracts, registry, i);
            r.add("contracted_mwh", residual.total_removed_mwh());
            r.add("ci_res", residual_ci(residual, registry).g_per_kwh);
            r.add("over_contracted", residual.over_contracted);
            residual_emissions += total_emissions_g(residual.mix, registry);
            residual_energy += residual.mix.total_energy_mwh();
        }
        out.push_back(std::move(r));
    }
    if (energy <= 0.0)
    {
        throw Error(ErrorKind::EmptyDataset, mix_path + ": no generation");
    }
    Record agg;
    agg.add("region", ds.region);
    agg.add("timestamp", "aggregate");
    agg.add("generation_mwh", energy);
    agg.add("ci_loc", emissions / (energy * kKwhPerMwh));
    if (with_contracts)
    {
        agg.add("contracted_mwh", energy - residual_energy);
        agg.add("ci_res", residual_emissions / (residual_energy * kKwhPerMwh));
    }
    out.push_back(std::move(agg));
    return out;
}

std::vector<Record> cmd_residual(
    std::string const& mix_path,
    ContractSpec const& spec,
    LoadOptions const& load,
    SourceRegistry const& registry
)
{
    auto const ds = load_region_csv(mix_path, schema(load), registry).dataset;
    auto const contracts_for = contract_source(spec, registry);
    std::vector<Record> out;
    for (std::size_t i = 0; i < ds.series.size(); ++i)
    {
        auto const& step = ds.series[i];
        auto const residual
            = compute_residual_mix(step, contracts_for(step), registry, i);
        Record r;
        r.add("region", ds.region);
        r.add("timestamp", format_timestamp(*step.timestamp()));
        for (auto const& id : ds.source_ids)
        {
            r.add(id + "_mwh", residual.mix.energy_mwh(id));
        }
        r.add("removed_mwh", residual.total_removed_mwh());
        r.add("ci_res", residual_ci(residual, registry).g_per_kwh);
        r.add("over_contracted", residual.over_contracted);
        out.push_back(std::move(r));
    }
    return out;
}

void append_report(
    AttributionReport const& report,
    std::optional<std::string> const& timestamp,
    std::vector<Record>& out
)
{
    for (auto const& g : report.regions)
    {
        Record r;
        r.add("record", "region");
        r.add("scenario", report.scenario);
        if (timestamp)
        {
            r.add("timestamp", *timestamp);
        }
        r.add("region", g.region);
        r.add("generation_mwh", g.generation_mwh);
        r.add("grid_demand_mwh", g.grid_demand_mwh);
        r.add("cfe_share_pct", 100.0 * g.cfe_share);
        r.add("ci_loc", g.ci_loc.g_per_kwh);
        r.add("ci_res", g.ci_res.g_per_kwh);
        r.add("residual_cfe_share_pct", 100.0 * g.residual_cfe_share);
        r.add("contracted_mwh", g.contracted_mwh);
        r.add("double_counted_cfe_mwh", g.double_counted_cfe_mwh);
        r.add("over_contracted", g.over_contracted);
        out.push_back(std::move(r));
    }
    for (auto const& c : report.consumers)
    {
        auto const& rep = c.reported();
        Record r;
        r.add("record", "consumer");
        r.add("scenario", report.scenario);
        if (timestamp)
        {
            r.add("timestamp", *timestamp);
        }
        r.add("region", c.region);
        r.add("consumer", c.id);
        r.add("method", std::string(to_string(c.method)));
        r.add("demand_kwh", c.demand_kwh);
        r.add("attributed_cfe_kwh", rep.cfe_kwh);
        r.add("attributed_fossil_kwh", rep.fossil_kwh);
        r.add("ci_g_per_kwh", rep.ci.g_per_kwh);
        r.add("emissions_g", rep.emissions_g);
        r.add("location_cfe_kwh", c.location.cfe_kwh);
        r.add("location_ci", c.location.ci.g_per_kwh);
        r.add("market_cfe_kwh", c.market.cfe_kwh);
        r.add("market_ci", c.market.ci.g_per_kwh);
        r.add("claimed_cfe_kwh", c.claimed_cfe_kwh);
        r.add("over_claimed", c.over_claimed);
        out.push_back(std::move(r));
    }
    Record s;
    s.add("record", "summary");
    s.add("scenario", report.scenario);
    if (timestamp)
    {
        s.add("timestamp", *timestamp);
    }
    s.add("public_signal_adjusted", report.public_signal_adjusted);
    s.add("double_counted_cfe_mwh", report.double_counted_cfe_mwh);
    out.push_back(std::move(s));
}

std::vector<Record> cmd_attribute(
    std::string const& mix_path,
    std::string const& parties_path,
    bool adjusted,
    LoadOptions const& load,
    SourceRegistry const& registry
)
{
    auto const ds = load_region_csv(mix_path, schema(load), registry).dataset;
    auto const parties = parse_parties(read_text(parties_path));
    std::vector<Record> out;
    for (std::size_t i = 0; i < ds.series.size(); ++i)
    {
        auto const& step = ds.series[i];
        Scenario s;
        s.name = ds.region;
        s.sources = registry;
        s.regions.emplace(ds.region, step);
        s.consumers = parties.consumers;
        s.public_signal_adjusted = adjusted;
        for (auto const& c : parties.contracts)
        {
            Contract copy = c;
            copy.energy_mwh = {c.energy_at(i)};
            s.contracts.push_back(std::move(copy));
        }
        append_report(run_scenario(s), format_timestamp(*step.timestamp()), out);
    }
    return out;
}

std::vector<Record> cmd_penetration(
    std::string const& data,
    std::string const& categories,
    std::string const& mode,
    std::string const& cdf_out,
    OutputFormat format,
    LoadOptions const& load,
    SourceRegistry const& registry,
    std::vector<std::pair<std::string, std::string>>& extra_files
)
{
    auto const datasets = load_datasets(data, schema(load), registry);
    auto const fleet = penetration_fleet(
        datasets,
        registry,
        parse_categories(categories),
        mode == "hourly-mean" ? PenetrationMode::HourlyMean
                              : PenetrationMode::EnergyWeighted
    );
    std::vector<Record> out;
    for (auto const& s : fleet.regions)
    {
        Record r;
        r.add("region", s.region);
        r.add("total_generation_mwh", s.total_generation_mwh);
        r.add("solar_wind_mwh", s.solar_wind_mwh);
        r.add("solar_wind_pct", s.solar_wind_pct);
        out.push_back(std::move(r));
    }
    if (!cdf_out.empty())
    {
        std::vector<Record> cdf;
        for (auto const& p : fleet.cdf)
        {
            Record r;
            r.add("solar_wind_pct", p.value);
            r.add("cumulative", p.cumulative);
            cdf.push_back(std::move(r));
        }
        std::ostringstream text;
        write_records(cdf, format, text);
        extra_files.emplace_back(cdf_out, text.str());
    }
    return out;
}

std::vector<Record> cmd_inflation(
    std::string const& data,
    double fraction,
    std::string const& categories,
    std::string const& basis,
    LoadOptions const& load,
    SourceRegistry const& registry
)
{
    auto const datasets = load_datasets(data, schema(load), registry);
    auto const fractions = fractions_for(parse_categories(categories), fraction);
    auto const b = basis == "registry" ? EmissionsBasis::Registry
        : basis == "published"         ? EmissionsBasis::PublishedCi
                                       : EmissionsBasis::Automatic;
    std::vector<Record> out;
    for (auto const& ds : datasets)
    {
        auto const res = residual_inflation(ds, fractions, registry, b);
        Record r;
        r.add("region", res.region);
        r.add("contract_fraction", fraction);
        r.add("total_generation_mwh", res.total_generation_mwh);
        r.add("contracted_mwh", res.contracted_mwh);
        r.add("ci_loc", res.ci_loc.g_per_kwh);
        r.add("ci_res", res.ci_res.g_per_kwh);
        r.add("increase_pct", res.increase_pct);
        out.push_back(std::move(r));
    }
    return out;
}

struct ScheduleArgs
{
    std::string reported;
    std::string actual;
    std::string mix;
    double fraction = 1.0;
    std::string categories = "solar,wind";
    double energy = 1.0;
    std::size_t duration = 1;
    std::size_t earliest = 0;
    std::optional<std::size_t> latest;
    std::optional<std::size_t> start;
    bool non_contiguous = false;
};

std::vector<Record> cmd_schedule(
    ScheduleArgs const& a,
    LoadOptions const& load,
    SourceRegistry const& registry
)
{
    std::vector<double> reported;
    std::vector<double> actual;
    if (!a.mix.empty())
    {
        if (!a.reported.empty() || !a.actual.empty())
        {
            throw Error(
                ErrorKind::SchemaError,
                "use either --mix or --reported/--actual, not both"
            );
        }
        auto const ds = load_region_csv(a.mix, schema(load), registry).dataset;
        reported = total_signal(ds, registry);
        actual = residual_signal(
            ds,
            fractions_for(parse_categories(a.categories), a.fraction),
            registry
        );
    }
    else
    {
        if (a.reported.empty() || a.actual.empty())
        {
            throw Error(
                ErrorKind::SchemaError,
                "schedule needs --mix or both --reported and --actual"
            );
        }
        auto const r = load_ci_signal(a.reported);
        auto const t = load_ci_signal(a.actual);
        if (r.timestamps != t.timestamps)
        {
            throw Error(
                ErrorKind::SignalMismatch,
                "reported and actual signals cover different hours"
            );
        }
        reported = r.g_per_kwh;
        actual = t.g_per_kwh;
    }

    FlexibleLoad flex;
    flex.energy_per_hour_kwh = a.energy;
    flex.duration_hours = a.duration;
    flex.earliest_start = a.earliest;
    flex.latest_start = a.latest;
    flex.contiguous = !a.non_contiguous;

    Schedule chosen = a.start
        ? schedule_for(FixedStartPolicy{*a.start}, reported, flex)
        : best_window(reported, flex);
    auto const worst = worst_window(reported, flex);
    auto const result = evaluate_schedule(chosen.hours, flex, reported, actual);

    Record r;
    r.add("hours", join_hours(result.hours));
    if (chosen.start)
    {
        r.add("start", static_cast<std::int64_t>(*chosen.start));
    }
    r.add("energy_kwh", result.energy_kwh);
    r.add("reported_emissions_g", result.reported_emissions_g);
    r.add("actual_emissions_g", result.actual_emissions_g);
    r.add("reported_ci_avg", result.reported_ci_avg);
    r.add("actual_ci_avg", result.actual_ci_avg);
    r.add("difference_g_per_kwh", result.difference_g_per_kwh);
    r.add("discrepancy_pct", result.discrepancy_pct);
    r.add("worst_hours", join_hours(worst.hours));
    r.add("reported_shift_savings_pct", savings_pct(worst.hours, chosen.hours, reported));
    r.add("actual_shift_savings_pct", savings_pct(worst.hours, chosen.hours, actual));
    return {r};
}

void emit(std::string const& path, std::string const& text, std::ostream& out)
{
    if (path == "-")
    {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
    {
        throw Error(ErrorKind::Io, "cannot write " + path);
    }
    f << text;
    if (!f)
    {
        throw Error(ErrorKind::Io, "write failed for " + path);
    }
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Grid carbon accounting: location/market/residual CI, "
                 "attribution, double counting and carbon-aware scheduling"};
    app.name("gridcarbon");
    app.require_subcommand(1);

    CommonOptions common;
    LoadOptions load;
    ContractSpec contracts;
    std::string mix_path;

    auto* ci = app.add_subcommand("ci", "average (and residual) carbon intensity per step");
    add_common(ci, common);
    add_load(ci, load);
    ci->add_option("--mix", mix_path, "region CSV")->required();
    ci->add_option("--contracts", contracts.mode, "none | all-solar-wind | fraction | contracts JSON");
    ci->add_option("--fraction", contracts.fraction, "contracted share for all-solar-wind/fraction")
        ->check(CLI::Range(0.0, 1.0));
    ci->add_option("--categories", contracts.categories, "categories contracted by --fraction");

    auto* residual = app.add_subcommand("residual", "residual mix per step after contracts");
    add_common(residual, common);
    add_load(residual, load);
    residual->add_option("--mix", mix_path, "region CSV")->required();
    residual->add_option("--contracts", contracts.mode, "all-solar-wind | fraction | contracts JSON")
        ->default_str("all-solar-wind");
    residual->add_option("--fraction", contracts.fraction)->check(CLI::Range(0.0, 1.0));
    residual->add_option("--categories", contracts.categories);

    std::string scenario_file;
    std::string builtin;
    auto* scenario = app.add_subcommand("scenario", "run an attribution scenario");
    add_common(scenario, common);
    auto* file_opt = scenario->add_option("--file", scenario_file, "scenario JSON");
    auto* builtin_opt = scenario->add_option("--builtin", builtin, "built-in fixture name");
    file_opt->excludes(builtin_opt);

    std::string parties_path;
    bool adjusted = false;
    auto* attribute = app.add_subcommand("attribute", "hourly attribution over a region CSV");
    add_common(attribute, common);
    add_load(attribute, load);
    attribute->add_option("--mix", mix_path, "region CSV")->required();
    attribute->add_option("--parties", parties_path, "consumers/contracts JSON")->required();
    attribute->add_flag("--adjusted", adjusted, "published CI already excludes contracted energy");

    std::string data;
    std::string categories = "solar,wind";
    std::string pen_mode = "energy";
    std::string cdf_out;
    auto* pen = app.add_subcommand("penetration", "solar+wind share per region and its CDF");
    add_common(pen, common);
    add_load(pen, load);
    pen->add_option("--data", data, "region CSV or directory of them")->required();
    pen->add_option("--categories", categories);
    pen->add_option("--mode", pen_mode, "energy | hourly-mean")
        ->check(CLI::IsMember({"energy", "hourly-mean"}));
    pen->add_option("--cdf-out", cdf_out, "where to write the CDF points");

    double inflation_fraction = 1.0;
    std::string basis = "auto";
    auto* inflation = app.add_subcommand("inflation", "residual CI increase when renewables are contracted");
    add_common(inflation, common);
    add_load(inflation, load);
    inflation->add_option("--data", data, "region CSV or directory of them")->required();
    inflation->add_option("--fraction", inflation_fraction)->check(CLI::Range(0.0, 1.0));
    inflation->add_option("--categories", categories);
    inflation->add_option("--basis", basis, "auto | registry | published")
        ->check(CLI::IsMember({"auto", "registry", "published"}));

    ScheduleArgs sched;
    auto* schedule = app.add_subcommand("schedule", "carbon-aware load placement and signal discrepancy");
    add_common(schedule, common);
    add_load(schedule, load);
    schedule->add_option("--reported", sched.reported, "CI signal the scheduler follows");
    schedule->add_option("--actual", sched.actual, "CI signal used for true accounting");
    schedule->add_option("--mix", sched.mix, "derive both signals from a region CSV");
    schedule->add_option("--fraction", sched.fraction, "contracted share for the actual signal")
        ->check(CLI::Range(0.0, 1.0));
    schedule->add_option("--categories", sched.categories);
    schedule->add_option("--energy", sched.energy, "kWh drawn per hour")->check(CLI::NonNegativeNumber);
    schedule->add_option("--duration", sched.duration, "hours")->required()->check(CLI::PositiveNumber);
    schedule->add_option("--earliest", sched.earliest, "earliest start index");
    schedule->add_option("--latest", sched.latest, "latest start index");
    schedule->add_option("--start", sched.start, "fix the start instead of searching");
    schedule->add_flag("--non-contiguous", sched.non_contiguous, "allow split hours");

    auto* fixtures = app.add_subcommand("fixtures", "built-in attribution scenarios");
    fixtures->require_subcommand(1);
    auto* list = fixtures->add_subcommand("list", "print fixture names");
    std::string show_name;
    auto* show = fixtures->add_subcommand("show", "print a fixture's JSON");
    show->add_option("name", show_name)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return kExitOk;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try
    {
        if (list->parsed())
        {
            for (auto const& name : builtin_scenario_names())
            {
                out << name << '\n';
            }
            return kExitOk;
        }
        if (show->parsed())
        {
            out << builtin_scenario_json(show_name) << '\n';
            return kExitOk;
        }

        auto const format = *parse_output_format(common.format);
        // Inputs are checked before any computation starts.
        for (auto const* p : {&mix_path, &scenario_file, &parties_path, &data,
                              &sched.reported, &sched.actual, &sched.mix})
        {
            if (!p->empty())
            {
                require_path(*p);
            }
        }
        auto const registry = make_registry(common);

        std::vector<Record> records;
        std::vector<std::pair<std::string, std::string>> extra_files;
        if (ci->parsed())
        {
            records = cmd_ci(mix_path, contracts, load, registry);
        }
        else if (residual->parsed())
        {
            if (contracts.mode == "none")
            {
                contracts.mode = "all-solar-wind";
            }
            records = cmd_residual(mix_path, contracts, load, registry);
        }
        else if (scenario->parsed())
        {
            if (scenario_file.empty() == builtin.empty())
            {
                throw Error(
                    ErrorKind::ScenarioInvalid,
                    "scenario needs exactly one of --file or --builtin"
                );
            }
            auto const s = builtin.empty() ? load_scenario_file(scenario_file)
                                           : builtin_scenario(builtin);
            append_report(run_scenario(s), std::nullopt, records);
        }
        else if (attribute->parsed())
        {
            records = cmd_attribute(mix_path, parties_path, adjusted, load, registry);
        }
        else if (pen->parsed())
        {
            records = cmd_penetration(
                data, categories, pen_mode, cdf_out, format, load, registry, extra_files
            );
        }
        else if (inflation->parsed())
        {
            records = cmd_inflation(data, inflation_fraction, categories, basis, load, registry);
        }
        else if (schedule->parsed())
        {
            records = cmd_schedule(sched, load, registry);
        }

        std::ostringstream text;
        write_records(records, format, text);
        emit(common.out, text.str(), out);
        for (auto const& [path, body] : extra_files)
        {
            emit(path, body, out);
        }
        return kExitOk;
    }
    catch (Error const& e)
    {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return e.kind() == ErrorKind::Io ? kExitIo : kExitValidation;
    }
    catch (fs::filesystem_error const& e)
    {
        err << "error [Io]: " << e.what() << '\n';
        return kExitIo;
    }
}

} // namespace gridcarbon::cli
