#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "heatengine/analysis.hpp"

namespace heatengine {

struct SweepOutputs {
    bool local_works = false;
    bool t2 = false;
    bool cop = false;
    bool decomposition = false;
};

/// Declarative Cartesian sweep over (j, b1, b2); rows are emitted in
/// that nesting order regardless of how many workers compute them.
struct SweepConfig {
    SpinValue spin_a{1};
    SpinValue spin_b{1};
    std::vector<double> j_values;
    std::vector<double> b1_values;
    std::vector<double> b2_values;
    SideSpec meas_a;
    SideSpec meas_b;
    double kbt = 1.0;
    SweepOutputs outputs;
};

struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Parses the JSON text of a sweep config; error messages name the
/// offending field.
SweepConfig parse_sweep_config(const std::string& json_text);

struct PointSpec {
    SpinValue spin_a{1};
    SpinValue spin_b{1};
    double j = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double kbt = 1.0;
    SideSpec meas_a;
    SideSpec meas_b;
    SweepOutputs outputs;
};

/// One row of the flat output schema. Optional fields print as empty
/// columns when a quantity was not requested or is not applicable.
struct SweepRecord {
    std::string spin_a, spin_b;
    double j = 0.0, b1 = 0.0, b2 = 0.0, kbt = 1.0;
    std::string meas_a, meas_b;
    std::optional<double> theta_a, phi_a, theta_b, phi_b;
    std::optional<double> w1, w2, wt, qm, qt;
    std::optional<double> eta;
    std::optional<double> w_local_a, w_local_b, t2_effective, cop;
    std::string status = "ok";
};

SweepRecord evaluate_point(const PointSpec& p);

std::string csv_header();
std::string to_csv_row(const SweepRecord& r);
std::string to_json_object(const SweepRecord& r);

/// Prints a double with 12 significant digits after the point, in a
/// fixed exponent format so output bytes are reproducible.
std::string format_double(double v);

enum class SweepFormat { Csv, Json };

/// Runs every point of the config on `threads` workers and writes rows
/// in input order; output is byte-identical for identical configs.
void run_sweep(const SweepConfig& config, std::ostream& out, int threads, SweepFormat format = SweepFormat::Csv);

}  // namespace heatengine
