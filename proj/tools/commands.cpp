#include "commands.hpp"

#include "cfbfhs/balancer.hpp"
#include "cfbfhs/fairness.hpp"
#include "cfbfhs/hop_mapping.hpp"
#include "cfbfhs/sequence_io.hpp"

#include <CLI11.hpp>

#include <string_view>
#include <utility>

namespace cfbfhs::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::uint64_t json_unsigned(const json& doc, std::string_view key)
{
    const auto& value = doc.at(std::string(key));
    if (!value.is_number_unsigned()) {
        throw Error(ErrorKind::config, "config key '" + std::string(key) + "' must be a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

std::vector<std::size_t> json_unsigned_list(const json& doc, std::string_view key)
{
    const auto& value = doc.at(std::string(key));
    if (value.is_array()) {
        std::vector<std::size_t> out;
        for (const auto& item : value) {
            if (!item.is_number_unsigned()) {
                throw Error(ErrorKind::config, "config key '" + std::string(key) + "' must hold integers");
            }
            out.push_back(item.get<std::size_t>());
        }
        return out;
    }
    return {static_cast<std::size_t>(json_unsigned(doc, key))};
}

Polynomial json_polynomial(const json& doc)
{
    const auto& value = doc.at("poly");
    if (value.is_string()) return parse_polynomial(value.get<std::string>());
    if (value.is_array()) {
        Polynomial taps;
        for (const auto& item : value) {
            if (!item.is_number_unsigned()) throw Error(ErrorKind::config, "config key 'poly' must hold integers");
            taps.push_back(item.get<Symbol>());
        }
        return taps;
    }
    throw Error(ErrorKind::config, "config key 'poly' must be a string or an array");
}

OutputFormat parse_format(std::string_view text)
{
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw Error(ErrorKind::config, "output format must be 'csv' or 'json', got '" + std::string(text) + "'");
}

std::uint32_t checked_p(std::uint64_t p)
{
    if (p > 0xffffffffu) throw Error(ErrorKind::config, "p is too large");
    return static_cast<std::uint32_t>(p);
}

std::size_t tuple_width_for_spots(std::uint32_t p, std::size_t spots)
{
    try {
        return FrequencyPlan::from_spots(p, spots).tuple_width();
    } catch (const Error& e) {
        throw Error(ErrorKind::config, e.what());
    }
}

std::size_t resolve_degree(const std::optional<std::size_t>& degree, const std::optional<Polynomial>& poly)
{
    if (poly) {
        if (poly->size() < 2) throw Error(ErrorKind::invalid_polynomial, "polynomial must have degree >= 1");
        const std::size_t from_poly = poly->size() - 1;
        if (degree && *degree != from_poly) {
            throw Error(ErrorKind::config, "l=" + std::to_string(*degree) + " disagrees with the degree " +
                                               std::to_string(from_poly) + " of --poly");
        }
        return from_poly;
    }
    return degree.value_or(14);
}

LfsrConfig lfsr_config(std::uint32_t p, std::size_t degree, const std::optional<Polynomial>& poly)
{
    if (!poly) return default_lfsr_config(p, degree);
    LfsrConfig cfg;
    cfg.p = p;
    cfg.taps = *poly;
    cfg.seed.assign(degree, 0);
    cfg.seed.front() = 1;
    return cfg;
}

std::string file_stem(const fs::path& path)
{
    auto stem = path.stem().string();
    return stem.empty() ? std::string("input") : stem;
}

void print_error(std::ostream& err, std::string_view kind, const std::string& message, int code, json extra = {})
{
    json doc = {{"error", kind}, {"message", message}, {"exit_code", code}};
    if (extra.is_object()) doc.update(extra);
    err << doc.dump() << '\n';
}

} // namespace

int exit_code_for(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::config:
    case ErrorKind::family_size:
    case ErrorKind::invalid_argument:
    case ErrorKind::unsupported_degree:
        return exit_config;
    case ErrorKind::io:
    case ErrorKind::parse:
        return exit_io;
    default:
        return exit_domain;
    }
}

nlohmann::json load_config_file(const fs::path& path)
{
    const std::string text = read_text_file(path);
    try {
        auto doc = json::parse(text);
        if (!doc.is_object()) throw Error(ErrorKind::config, path.string() + ": config must be a JSON object");
        return doc;
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::config, path.string() + ": " + e.what());
    }
}

void apply_config_json(const json& doc, RunConfig& cfg)
{
    if (doc.contains("p")) cfg.p = checked_p(json_unsigned(doc, "p"));
    if (doc.contains("l")) cfg.l = json_unsigned(doc, "l");
    if (doc.contains("b")) cfg.b = json_unsigned(doc, "b");
    if (doc.contains("M")) cfg.b = tuple_width_for_spots(cfg.p, json_unsigned(doc, "M"));
    if (doc.contains("q")) cfg.q = json_unsigned(doc, "q");
    if (doc.contains("tau")) cfg.tau = json_unsigned(doc, "tau");
    if (doc.contains("poly")) cfg.poly = json_polynomial(doc);
    if (doc.contains("out")) cfg.out = doc.at("out").get<std::string>();
    if (doc.contains("format")) cfg.format = parse_format(doc.at("format").get<std::string>());
}

void apply_config_json(const json& doc, FairnessSweep& sweep)
{
    if (doc.contains("p")) sweep.p = checked_p(json_unsigned(doc, "p"));
    if (doc.contains("l")) sweep.degrees = json_unsigned_list(doc, "l");
    if (doc.contains("b")) sweep.tuple_widths = json_unsigned_list(doc, "b");
    if (doc.contains("M")) {
        sweep.tuple_widths.clear();
        for (auto m : json_unsigned_list(doc, "M")) sweep.tuple_widths.push_back(tuple_width_for_spots(sweep.p, m));
    }
    if (doc.contains("tau")) sweep.tau = json_unsigned(doc, "tau");
    if (doc.contains("poly")) sweep.poly = json_polynomial(doc);
    if (doc.contains("out")) sweep.out = doc.at("out").get<std::string>();
    if (doc.contains("format")) sweep.format = parse_format(doc.at("format").get<std::string>());
}

void cmd_generate(const RunConfig& cfg, std::ostream& out)
{
    const FrequencyPlan plan(cfg.p, cfg.b);
    validate_family(cfg.q, plan);
    const std::size_t degree = resolve_degree(cfg.l, cfg.poly);
    const MSequence mseq = generate_m_sequence(lfsr_config(cfg.p, degree, cfg.poly));
    const std::uint64_t tau = cfg.tau.value_or(default_tau(mseq.period(), cfg.q));
    const FamilyConfig family = make_family(cfg.q, tau, mseq.period(), plan);

    const SequenceSet base = build_base_set(mseq, family, plan);
    const BalanceResult balanced = cfb_balance(base);

    std::vector<std::string> files{"base.seq", "balanced.seq"};
    write_file_atomic(cfg.out / "base.seq", format_sequence_set(base));
    write_file_atomic(cfg.out / "balanced.seq", format_sequence_set(balanced.balanced));
    if (cfg.format == OutputFormat::csv) {
        write_file_atomic(cfg.out / "ledger_ops.csv", ledger_ops_csv(balanced.ledger));
        write_file_atomic(cfg.out / "ledger_usage.csv", ledger_usage_csv(balanced.ledger));
        files.insert(files.end(), {"ledger_ops.csv", "ledger_usage.csv"});
    } else {
        json ledger = {{"op_counts", balanced.ledger.op_counts()}, {"usage", json::array()}};
        for (std::size_t a = 0; a < balanced.ledger.family_size(); ++a) {
            ledger["usage"].push_back(balanced.ledger.usage_row(a));
        }
        write_file_atomic(cfg.out / "ledger.json", ledger.dump() + "\n");
        files.emplace_back("ledger.json");
    }

    const json summary = {
        {"p", cfg.p},         {"l", degree},      {"n", mseq.period()},
        {"length", base.length()}, {"M", plan.spots()}, {"q", cfg.q},
        {"tau", tau},         {"op_counts", balanced.ledger.op_counts()},
        {"out", cfg.out.string()}, {"files", files},
    };
    out << summary.dump() << '\n';
}

json report_json(const AnalysisReport& report, const SequenceSet& set)
{
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back({{"u", v.u}, {"v", v.v}, {"count", v.count}});
    return {
        {"M", set.plan().spots()},
        {"n", set.length()},
        {"q", set.size()},
        {"kind", to_string(set.kind())},
        {"max_hamming", report.max_hamming},
        {"peng_fan_bound", std::stod(report.peng_fan.to_decimal(4))},
        {"peng_fan_bound_exact", report.peng_fan.to_fraction()},
        {"orthogonal_at_zero", report.orthogonal_at_zero},
        {"no_hit_zone", report.no_hit_zone},
        {"violations", violations},
        {"histograms", report.histograms},
    };
}

void cmd_analyze(const std::vector<fs::path>& inputs, const fs::path& out_dir, bool write_profiles,
                 std::ostream& out)
{
    for (const auto& input : inputs) {
        const SequenceSet set = read_sequence_file(input);
        const AnalysisReport report = analyze_set(set);
        const std::string stem = file_stem(input);
        json doc = report_json(report, set);
        write_file_atomic(out_dir / (stem + "_report.json"), doc.dump(2) + "\n");
        write_file_atomic(out_dir / (stem + "_histograms.csv"), histogram_csv(report.histograms));
        if (write_profiles) {
            for (const auto& profile : report.profiles) {
                const auto name = "profile_" + std::to_string(profile.u) + "_" + std::to_string(profile.v) + ".csv";
                write_file_atomic(out_dir / (stem + "_profiles") / name, profile_csv(profile));
            }
        }
        doc.erase("histograms");
        doc["file"] = input.string();
        out << doc.dump() << '\n';
    }
}

void cmd_fairness(const FairnessSweep& sweep, std::ostream& out)
{
    std::vector<std::size_t> degrees = sweep.degrees;
    if (sweep.poly) {
        if (degrees.size() > 1) throw Error(ErrorKind::config, "--poly applies to a single degree only");
        degrees = {resolve_degree(degrees.empty() ? std::nullopt : std::optional(degrees.front()), sweep.poly)};
    } else if (degrees.empty()) {
        degrees = {14};
    }

    std::string fit_table = "p,l,M,h1,h2\n";
    json all = json::array();
    for (std::size_t degree : degrees) {
        const MSequence mseq = generate_m_sequence(lfsr_config(sweep.p, degree, sweep.poly));
        for (std::size_t width : sweep.tuple_widths) {
            const FrequencyPlan plan(sweep.p, width);
            const FairnessReport report = mean_operation_curve(mseq, plan, sweep.tau);
            const std::string tag =
                "p" + std::to_string(sweep.p) + "_l" + std::to_string(degree) + "_M" + std::to_string(plan.spots());
            fit_table += std::to_string(sweep.p) + "," + std::to_string(degree) + "," + std::to_string(plan.spots()) +
                         "," + format_double(report.fit.slope) + "," + format_double(report.fit.intercept) + "\n";
            json points = json::array();
            for (const auto& point : report.points) {
                points.push_back({{"q", point.q},
                                  {"tau", point.tau},
                                  {"mean_ops", point.mean_ops},
                                  {"normalized", point.normalized},
                                  {"per_sequence_ops", point.per_sequence_ops}});
            }
            all.push_back({{"p", sweep.p},
                           {"l", degree},
                           {"M", plan.spots()},
                           {"h1", report.fit.slope},
                           {"h2", report.fit.intercept},
                           {"points", points}});
            if (sweep.format == OutputFormat::csv) {
                write_file_atomic(sweep.out / ("fairness_" + tag + ".csv"), fairness_csv(report));
            }
            out << json{{"p", sweep.p}, {"l", degree}, {"M", plan.spots()}, {"h1", report.fit.slope},
                        {"h2", report.fit.intercept}}
                       .dump()
                << '\n';
        }
    }
    if (sweep.format == OutputFormat::csv) {
        write_file_atomic(sweep.out / "fairness_fit.csv", fit_table);
    } else {
        write_file_atomic(sweep.out / "fairness.json", all.dump(2) + "\n");
    }
}

json collision_json(const CollisionReport& report)
{
    return {
        {"users", report.users},
        {"hops", report.hops},
        {"total_collisions", report.total_collisions},
        {"collision_rate", report.collision_rate},
        {"per_pair", report.per_pair},
    };
}

void cmd_simulate(const fs::path& scenario_path, const std::optional<fs::path>& out_file, std::ostream& out)
{
    json doc;
    try {
        doc = json::parse(read_text_file(scenario_path));
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::config, scenario_path.string() + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("sequences") || !doc.at("sequences").is_string()) {
        throw Error(ErrorKind::config, scenario_path.string() + ": scenario needs a \"sequences\" file path");
    }
    const auto resolve = [&](const std::string& p) {
        const fs::path path(p);
        return path.is_absolute() ? path : scenario_path.parent_path() / path;
    };

    std::vector<double> offsets;
    if (doc.contains("offsets")) {
        if (!doc.at("offsets").is_array()) throw Error(ErrorKind::config, "\"offsets\" must be an array");
        for (const auto& item : doc.at("offsets")) {
            if (!item.is_number()) throw Error(ErrorKind::config, "\"offsets\" must hold numbers");
            offsets.push_back(item.get<double>());
        }
    }

    const SequenceSet set = read_sequence_file(resolve(doc.at("sequences").get<std::string>()));
    const std::size_t hops = doc.contains("hops") ? json_unsigned(doc, "hops") : set.length();

    json result;
    if (doc.contains("compare")) {
        if (!doc.at("compare").is_string()) throw Error(ErrorKind::config, "\"compare\" must be a file path");
        const SequenceSet other = read_sequence_file(resolve(doc.at("compare").get<std::string>()));
        const auto [first, second] = compare_sets(set, other, hops, offsets);
        result = {{"sequences", collision_json(first)}, {"compare", collision_json(second)}};
    } else {
        result = collision_json(simulate(SimScenario{set, hops, offsets}));
    }

    if (out_file) {
        write_file_atomic(*out_file, result.dump(2) + "\n");
    }
    out << result.dump() << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Collision-free balanced frequency hopping sequence sets", "cfbfhs"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Build the base and balanced sets and the operation ledger");
    std::string gen_config;
    std::uint64_t gen_p = 2;
    std::size_t gen_l = 14, gen_b = 4, gen_m = 16, gen_q = 5;
    std::uint64_t gen_tau = 0;
    std::string gen_poly, gen_out = ".", gen_format = "csv";
    gen->add_option("--config", gen_config, "JSON file mirroring the flags");
    auto* gen_p_opt = gen->add_option("--p", gen_p, "Prime field size");
    auto* gen_l_opt = gen->add_option("--l", gen_l, "Degree of the primitive polynomial");
    auto* gen_b_opt = gen->add_option("--b", gen_b, "Tuple width; M = p^b");
    auto* gen_m_opt = gen->add_option("--M", gen_m, "Number of frequency spots (alternative to --b)");
    auto* gen_q_opt = gen->add_option("--q", gen_q, "Family size, 1 <= q <= M");
    auto* gen_tau_opt = gen->add_option("--tau", gen_tau, "Prime shift between base sequences");
    auto* gen_poly_opt = gen->add_option("--poly", gen_poly, "Polynomial coefficients, lowest degree first");
    auto* gen_out_opt = gen->add_option("--out", gen_out, "Output directory");
    auto* gen_format_opt = gen->add_option("--format", gen_format, "Ledger format: csv or json");

    // analyze
    auto* ana = app.add_subcommand("analyze", "Correlation, bound and histogram report for sequence files");
    std::vector<std::string> ana_inputs;
    std::string ana_out = ".";
    bool ana_no_profiles = false;
    ana->add_option("inputs", ana_inputs, "Sequence files")->required();
    ana->add_option("--out", ana_out, "Output directory");
    ana->add_flag("--no-profiles", ana_no_profiles, "Skip the per-pair profile CSVs");

    // fairness
    auto* fair = app.add_subcommand("fairness", "Mean-operation curve and linear fit for q = 1..M");
    std::string fair_config;
    std::uint64_t fair_p = 2;
    std::vector<std::size_t> fair_l, fair_b, fair_m;
    std::uint64_t fair_tau = 0;
    std::string fair_poly, fair_out = ".", fair_format = "csv";
    fair->add_option("--config", fair_config, "JSON file mirroring the flags");
    auto* fair_p_opt = fair->add_option("--p", fair_p, "Prime field size");
    auto* fair_l_opt = fair->add_option("--l", fair_l, "Polynomial degree(s)");
    auto* fair_b_opt = fair->add_option("--b", fair_b, "Tuple width(s)");
    auto* fair_m_opt = fair->add_option("--M", fair_m, "Spot count(s), alternative to --b");
    auto* fair_tau_opt = fair->add_option("--tau", fair_tau, "Fixed prime shift for every q");
    auto* fair_poly_opt = fair->add_option("--poly", fair_poly, "Polynomial coefficients, lowest degree first");
    auto* fair_out_opt = fair->add_option("--out", fair_out, "Output directory");
    auto* fair_format_opt = fair->add_option("--format", fair_format, "csv or json");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Synchronous FHMA slot-collision count for a scenario");
    std::string sim_scenario, sim_out;
    sim->add_option("scenario", sim_scenario, "Scenario JSON")->required();
    auto* sim_out_opt = sim->add_option("--out", sim_out, "Also write the report to this file");

    std::vector<const char*> argv;
    argv.push_back("cfbfhs");
    for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::Success& e) {
            return app.exit(e, out, err);
        } catch (const CLI::ParseError& e) {
            print_error(err, to_string(ErrorKind::config), e.what(), exit_config);
            return exit_config;
        }

        if (gen->parsed()) {
            RunConfig cfg;
            if (!gen_config.empty()) apply_config_json(load_config_file(gen_config), cfg);
            if (gen_p_opt->count()) cfg.p = checked_p(gen_p);
            if (gen_l_opt->count()) cfg.l = gen_l;
            if (gen_b_opt->count()) cfg.b = gen_b;
            if (gen_m_opt->count()) {
                if (gen_b_opt->count() && tuple_width_for_spots(cfg.p, gen_m) != gen_b) {
                    throw Error(ErrorKind::config, "--M and --b disagree");
                }
                cfg.b = tuple_width_for_spots(cfg.p, gen_m);
            }
            if (gen_q_opt->count()) cfg.q = gen_q;
            if (gen_tau_opt->count()) cfg.tau = gen_tau;
            if (gen_poly_opt->count()) cfg.poly = parse_polynomial(gen_poly);
            if (gen_out_opt->count()) cfg.out = gen_out;
            if (gen_format_opt->count()) cfg.format = parse_format(gen_format);
            cmd_generate(cfg, out);
        } else if (ana->parsed()) {
            std::vector<fs::path> inputs(ana_inputs.begin(), ana_inputs.end());
            cmd_analyze(inputs, ana_out, !ana_no_profiles, out);
        } else if (fair->parsed()) {
            FairnessSweep sweep;
            if (!fair_config.empty()) apply_config_json(load_config_file(fair_config), sweep);
            if (fair_p_opt->count()) sweep.p = checked_p(fair_p);
            if (fair_l_opt->count()) sweep.degrees = fair_l;
            if (fair_b_opt->count()) sweep.tuple_widths = fair_b;
            if (fair_m_opt->count()) {
                sweep.tuple_widths.clear();
                for (auto m : fair_m) sweep.tuple_widths.push_back(tuple_width_for_spots(sweep.p, m));
            }
            if (fair_tau_opt->count()) sweep.tau = fair_tau;
            if (fair_poly_opt->count()) sweep.poly = parse_polynomial(fair_poly);
            if (fair_out_opt->count()) sweep.out = fair_out;
            if (fair_format_opt->count()) sweep.format = parse_format(fair_format);
            cmd_fairness(sweep, out);
        } else if (sim->parsed()) {
            std::optional<fs::path> target;
            if (sim_out_opt->count()) target = sim_out;
            cmd_simulate(sim_scenario, target, out);
        }
    } catch (const FamilySizeError& e) {
        print_error(err, to_string(e.kind()), e.what(), exit_config, {{"q", e.q()}, {"M", e.spots()}});
        return exit_config;
    } catch (const ParseError& e) {
        print_error(err, to_string(e.kind()), e.what(), exit_io, {{"line", e.line()}, {"column", e.column()}});
        return exit_io;
    } catch (const Error& e) {
        const int code = exit_code_for(e.kind());
        print_error(err, to_string(e.kind()), e.what(), code);
        return code;
    } catch (const json::exception& e) {
        print_error(err, to_string(ErrorKind::config), e.what(), exit_config);
        return exit_config;
    } catch (const fs::filesystem_error& e) {
        print_error(err, to_string(ErrorKind::io), e.what(), exit_io);
        return exit_io;
    } catch (const std::bad_alloc&) {
        print_error(err, "out-of-memory", "allocation failed", exit_domain);
        return exit_domain;
    }
    return exit_ok;
}

} // namespace cfbfhs::cli
