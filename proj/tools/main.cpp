#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heatengine/closed_forms.hpp"
#include "heatengine/sweep.hpp"
#include "heatengine/validate.hpp"

namespace {

using namespace heatengine;

int run_cycle_command(const PointSpec& spec, const std::string& format, const std::string& out_path,
                      bool with_decomposition) {
    const SweepRecord record = evaluate_point(spec);
    if (record.status.rfind("error:", 0) == 0) {
        std::cerr << "cycle failed: " << record.status.substr(6) << "\n";
        return 1;
    }

    std::string text;
    if (format == "csv") {
        text = to_csv_row(record) + "\n";
    } else {
        // The JSON object carries the full cycle result, not just the
        // flat sweep schema.
        const WorkingMedium medium(SpinValue::parse(record.spin_a), SpinValue::parse(record.spin_b), spec.j);
        const CyclePoint point{medium, FieldPoint{spec.b1}, FieldPoint{spec.b2}, 1.0 / spec.kbt,
                               make_scheme(medium, spec.meas_a, spec.meas_b)};
        const CycleResult cycle = run_cycle(point);

        nlohmann::json o = nlohmann::json::parse(to_json_object(record));
        o["post_probs"] = cycle.post_probs;
        nlohmann::json t = nlohmann::json::array();
        for (int m = 0; m < cycle.transition.dim; ++m) {
            nlohmann::json row = nlohmann::json::array();
            for (int n = 0; n < cycle.transition.dim; ++n) row.push_back(cycle.transition(m, n));
            t.push_back(row);
        }
        o["transition"] = t;
        if (with_decomposition) {
            const WorkDecomposition d = work_decomposition(point);
            nlohmann::json terms = nlohmann::json::array();
            for (int m = 0; m < d.dim; ++m) {
                nlohmann::json row = nlohmann::json::array();
                for (int n = 0; n < d.dim; ++n) row.push_back(d.term(m, n));
                terms.push_back(row);
            }
            o["work_terms"] = terms;
        }
        text = o.dump(2) + "\n";
    }

    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file '" << out_path << "'\n";
            return 1;
        }
        out << text;
    }
    return 0;
}

int run_sweep_command(const std::string& config_path, const std::string& out_path, int threads,
                      const std::string& format) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open config file '" << config_path << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    SweepConfig config;
    try {
        config = parse_sweep_config(buffer.str());
    } catch (const ConfigError& e) {
        std::cerr << "invalid sweep config: " << e.what() << "\n";
        return 2;
    }

    const SweepFormat fmt = (format == "json") ? SweepFormat::Json : SweepFormat::Csv;
    if (out_path.empty()) {
        run_sweep(config, std::cout, threads, fmt);
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file '" << out_path << "'\n";
        return 1;
    }
    run_sweep(config, out, threads, fmt);
    return 0;
}

int run_validate_command(const std::optional<double>& tol, const std::vector<std::string>& groups_wanted) {
    ValidationOptions options;
    options.tol = tol;
    options.groups = groups_wanted;
    const std::vector<ValidationGroup> groups = run_validation(options);
    if (groups.empty()) {
        std::cerr << "no validation group matches the requested names\n";
        return 2;
    }
    for (const ValidationGroup& g : groups) {
        const char* verdict = g.passed ? "PASS" : (g.advisory ? "REPORT" : "FAIL");
        std::printf("[%s] %-28s %s\n", verdict, g.name.c_str(), g.detail.c_str());
    }
    return all_blocking_passed(groups) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Measurement-driven spin-pair heat engine simulator"};
    app.require_subcommand(1);

    // cycle
    auto* cycle = app.add_subcommand("cycle", "Run one engine cycle and print the result");
    std::string spin_a = "1/2", spin_b = "1/2", meas_a = "x", meas_b = "z";
    double j = 0.0, b1 = 0.0, b2 = 0.0, kbt = 1.0;
    std::string cycle_format = "json", cycle_out;
    bool want_local = false, want_t2 = false, want_cop = false, want_decomposition = false;
    cycle->add_option("--spin-a", spin_a, "Spin of side A (1/2, 1, 3/2, ...)");
    cycle->add_option("--spin-b", spin_b, "Spin of side B");
    cycle->add_option("--j", j, "Exchange coupling J")->required();
    cycle->add_option("--b1", b1, "Initial field B1")->required();
    cycle->add_option("--b2", b2, "Final field B2")->required();
    cycle->add_option("--kbt", kbt, "Temperature in units of k_B (default 1)");
    cycle->add_option("--meas-a", meas_a, "Side A measurement: x|y|z|sic|theta=<v>,phi=<v>");
    cycle->add_option("--meas-b", meas_b, "Side B measurement: x|y|z|theta=<v>,phi=<v>");
    cycle->add_option("--format", cycle_format, "Output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cycle->add_option("--out", cycle_out, "Write the record to a file instead of stdout");
    cycle->add_flag("--local-works", want_local, "Include subsystem works");
    cycle->add_flag("--t2", want_t2, "Include the effective cold temperature");
    cycle->add_flag("--cop", want_cop, "Include the refrigerator COP");
    cycle->add_flag("--decomposition", want_decomposition, "Include pairwise work terms (json only)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a JSON config");
    std::string sweep_config, sweep_out, sweep_format = "csv";
    int threads = 0;
    sweep->add_option("--config", sweep_config, "Path to the sweep config JSON")->required();
    sweep->add_option("--out", sweep_out, "Output file (default stdout)");
    sweep->add_option("--threads", threads, "Worker count (default: machine parallelism)");
    sweep->add_option("--format", sweep_format, "Output format: csv|json")
        ->check(CLI::IsMember({"json", "csv"}));

    // validate
    auto* validate = app.add_subcommand("validate", "Run the reference-spectrum and oracle suites");
    double tol = 0.0;
    auto* tol_opt = validate->add_option("--tol", tol, "Override every group tolerance");
    std::vector<std::string> validate_groups;
    validate->add_option("--group", validate_groups,
                         "Run only the named group(s): tables, closed_forms, invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (cycle->parsed()) {
            PointSpec spec;
            try {
                spec.spin_a = SpinValue::parse(spin_a);
                spec.spin_b = SpinValue::parse(spin_b);
                spec.meas_a = SideSpec::parse(meas_a);
                spec.meas_b = SideSpec::parse(meas_b);
                if (spec.meas_b.kind == SideSpec::Kind::Sic)
                    throw std::invalid_argument("--meas-b: sic is only supported on side A");
                if (!(kbt > 0.0)) throw std::invalid_argument("--kbt must be positive");
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n\n" << app.help() << "\n";
                return 2;
            }
            spec.j = j;
            spec.b1 = b1;
            spec.b2 = b2;
            spec.kbt = kbt;
            spec.outputs.local_works = want_local;
            spec.outputs.t2 = want_t2;
            spec.outputs.cop = want_cop;
            spec.outputs.decomposition = want_decomposition;
            return run_cycle_command(spec, cycle_format, cycle_out, want_decomposition);
        }
        if (sweep->parsed()) return run_sweep_command(sweep_config, sweep_out, threads, sweep_format);
        if (validate->parsed())
            return run_validate_command(tol_opt->count() ? std::optional<double>(tol) : std::nullopt,
                                        validate_groups);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
