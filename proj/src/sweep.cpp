#include "heatengine/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include <json.hpp>

namespace heatengine {

namespace {

using nlohmann::json;

std::vector<double> parse_value_list(const json& node, const std::string& field) {
    std::vector<double> values;
    if (node.is_array()) {
        for (const auto& v : node) {
            if (!v.is_number()) throw ConfigError(field + ": expected numbers");
            values.push_back(v.get<double>());
        }
    } else if (node.is_object()) {
        for (const char* key : {"start", "stop", "count"})
            if (!node.contains(key)) throw ConfigError(field + ": range needs start/stop/count");
        const double start = node.at("start").get<double>();
        const double stop = node.at("stop").get<double>();
        const int count = node.at("count").get<int>();
        if (count < 1) throw ConfigError(field + ": count must be >= 1");
        for (int i = 0; i < count; ++i)
            values.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
    } else {
        throw ConfigError(field + ": expected an array or {start, stop, count}");
    }
    if (values.empty()) throw ConfigError(field + ": empty value list");
    for (double v : values)
        if (!std::isfinite(v)) throw ConfigError(field + ": values must be finite");
    return values;
}

SideSpec parse_side(const json& scheme, const char* key) {
    if (!scheme.contains(key) || !scheme.at(key).is_string())
        throw ConfigError(std::string("scheme.") + key + ": expected a descriptor string");
    try {
        return SideSpec::parse(scheme.at(key).get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("scheme.") + key + ": " + e.what());
    }
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config: expected a JSON object");

    SweepConfig cfg;
    const auto spin = [&root](const char* key) {
        if (!root.contains(key) || !root.at(key).is_string())
            throw ConfigError(std::string(key) + ": expected a spin tag string");
        try {
            return SpinValue::parse(root.at(key).get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string(key) + ": " + e.what());
        }
    };
    cfg.spin_a = spin("spin_a");
    cfg.spin_b = spin("spin_b");

    for (const char* key : {"j_values", "b1_values", "b2_values"})
        if (!root.contains(key)) throw ConfigError(std::string(key) + ": missing");
    cfg.j_values = parse_value_list(root.at("j_values"), "j_values");
    cfg.b1_values = parse_value_list(root.at("b1_values"), "b1_values");
    cfg.b2_values = parse_value_list(root.at("b2_values"), "b2_values");

    if (!root.contains("scheme") || !root.at("scheme").is_object())
        throw ConfigError("scheme: expected an object with meas_a and meas_b");
    cfg.meas_a = parse_side(root.at("scheme"), "meas_a");
    cfg.meas_b = parse_side(root.at("scheme"), "meas_b");
    if (cfg.meas_b.kind == SideSpec::Kind::Sic) throw ConfigError("scheme.meas_b: sic is only supported on side A");
    if (cfg.meas_a.kind == SideSpec::Kind::Sic && cfg.spin_a.twice_s != 1)
        throw ConfigError("scheme.meas_a: sic requires spin_a = 1/2");

    if (root.contains("kbt")) {
        if (!root.at("kbt").is_number()) throw ConfigError("kbt: expected a number");
        cfg.kbt = root.at("kbt").get<double>();
    }
    if (!(cfg.kbt > 0.0) || !std::isfinite(cfg.kbt)) throw ConfigError("kbt: must be finite and positive");

    if (root.contains("outputs")) {
        const json& out = root.at("outputs");
        if (!out.is_object()) throw ConfigError("outputs: expected an object of booleans");
        const auto flag = [&out](const char* key, bool& slot) {
            if (!out.contains(key)) return;
            if (!out.at(key).is_boolean()) throw ConfigError(std::string("outputs.") + key + ": expected a boolean");
            slot = out.at(key).get<bool>();
        };
        flag("local_works", cfg.outputs.local_works);
        flag("t2", cfg.outputs.t2);
        flag("cop", cfg.outputs.cop);
        flag("decomposition", cfg.outputs.decomposition);
    }
    return cfg;
}

SweepRecord evaluate_point(const PointSpec& p) {
    SweepRecord r;
    r.spin_a = p.spin_a.label();
    r.spin_b = p.spin_b.label();
    r.j = p.j;
    r.b1 = p.b1;
    r.b2 = p.b2;
    r.kbt = p.kbt;
    r.meas_a = p.meas_a.label();
    r.meas_b = p.meas_b.label();
    if (p.meas_a.kind != SideSpec::Kind::Sic) {
        const Direction d = p.meas_a.direction();
        r.theta_a = d.theta;
        r.phi_a = d.phi;
    }
    if (p.meas_b.kind != SideSpec::Kind::Sic) {
        const Direction d = p.meas_b.direction();
        r.theta_b = d.theta;
        r.phi_b = d.phi;
    }

    std::vector<std::string> flags;
    try {
        const WorkingMedium medium(p.spin_a, p.spin_b, p.j);
        const CyclePoint point{medium, FieldPoint{p.b1}, FieldPoint{p.b2}, 1.0 / p.kbt,
                               make_scheme(medium, p.meas_a, p.meas_b)};
        const CycleResult cycle = run_cycle(point);
        r.w1 = cycle.w1;
        r.w2 = cycle.w2;
        r.wt = cycle.wt;
        r.qm = cycle.qm;
        r.qt = cycle.qt;
        if (cycle.eta)
            r.eta = *cycle.eta;
        else
            flags.push_back("eta_undefined");

        if (p.outputs.local_works) {
            const LocalWorkResult lw = local_works(point);
            r.w_local_a = lw.w_a;
            r.w_local_b = lw.w_b;
        }
        if (p.outputs.t2 || p.outputs.cop) {
            const RefrigeratorResult fridge = effective_cold_temperature(point);
            if (p.outputs.t2) {
                if (fridge.t2)
                    r.t2_effective = *fridge.t2;
                else
                    flags.push_back("t2_not_found");
            }
            if (p.outputs.cop) {
                if (fridge.cop)
                    r.cop = *fridge.cop;
                else
                    flags.push_back("cop_not_applicable");
            }
        }
        if (p.outputs.decomposition) {
            const WorkDecomposition d = work_decomposition(point);
            if (std::abs(d.total() + cycle.wt) > 1e-9) flags.push_back("decomp_mismatch");
        }
    } catch (const std::exception& e) {
        flags.push_back(std::string("error:") + e.what());
    }

    if (flags.empty()) {
        r.status = "ok";
    } else {
        r.status.clear();
        for (size_t i = 0; i < flags.size(); ++i) r.status += (i ? ";" : "") + flags[i];
    }
    return r;
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // canonicalize -0.0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

namespace {

std::string opt_str(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string csv_header() {
    return "spin_a,spin_b,j,b1,b2,kbt,meas_a,meas_b,theta_a,phi_a,theta_b,phi_b,"
           "w1,w2,wt,qm,qt,eta,w_local_a,w_local_b,t2_effective,cop,status";
}

std::string to_csv_row(const SweepRecord& r) {
    std::string row;
    const auto add = [&row](const std::string& field) {
        if (!row.empty()) row += ',';
        // quote fields that would break the flat schema (angle labels and
        // error statuses can carry commas)
        if (field.find_first_of(",\"\n") != std::string::npos) {
            row += '"';
            for (char ch : field) {
                if (ch == '"') row += '"';
                row += ch;
            }
            row += '"';
        } else {
            row += field;
        }
    };
    add(r.spin_a);
    add(r.spin_b);
    add(format_double(r.j));
    add(format_double(r.b1));
    add(format_double(r.b2));
    add(format_double(r.kbt));
    add(r.meas_a);
    add(r.meas_b);
    add(opt_str(r.theta_a));
    add(opt_str(r.phi_a));
    add(opt_str(r.theta_b));
    add(opt_str(r.phi_b));
    add(opt_str(r.w1));
    add(opt_str(r.w2));
    add(opt_str(r.wt));
    add(opt_str(r.qm));
    add(opt_str(r.qt));
    add(opt_str(r.eta));
    add(opt_str(r.w_local_a));
    add(opt_str(r.w_local_b));
    add(opt_str(r.t2_effective));
    add(opt_str(r.cop));
    add(r.status);
    return row;
}

std::string to_json_object(const SweepRecord& r) {
    std::string o = "{";
    const auto add_raw = [&o](const char* key, const std::string& value, bool quote) {
        if (o.size() > 1) o += ',';
        o += '"';
        o += key;
        o += "\":";
        if (!quote) {
            o += value;
            return;
        }
        o += '"';
        for (char ch : value) {
            if (ch == '"' || ch == '\\') o += '\\';
            o += ch;
        }
        o += '"';
    };
    const auto add_num = [&](const char* key, const std::optional<double>& v) {
        add_raw(key, v ? format_double(*v) : "null", false);
    };
    add_raw("spin_a", r.spin_a, true);
    add_raw("spin_b", r.spin_b, true);
    add_num("j", r.j);
    add_num("b1", r.b1);
    add_num("b2", r.b2);
    add_num("kbt", r.kbt);
    add_raw("meas_a", r.meas_a, true);
    add_raw("meas_b", r.meas_b, true);
    add_num("theta_a", r.theta_a);
    add_num("phi_a", r.phi_a);
    add_num("theta_b", r.theta_b);
    add_num("phi_b", r.phi_b);
    add_num("w1", r.w1);
    add_num("w2", r.w2);
    add_num("wt", r.wt);
    add_num("qm", r.qm);
    add_num("qt", r.qt);
    add_num("eta", r.eta);
    add_num("w_local_a", r.w_local_a);
    add_num("w_local_b", r.w_local_b);
    add_num("t2_effective", r.t2_effective);
    add_num("cop", r.cop);
    add_raw("status", r.status, true);
    o += '}';
    return o;
}

void run_sweep(const SweepConfig& config, std::ostream& out, int threads, SweepFormat format) {
    std::vector<PointSpec> points;
    for (double j : config.j_values)
        for (double b1 : config.b1_values)
            for (double b2 : config.b2_values) {
                PointSpec p;
                p.spin_a = config.spin_a;
                p.spin_b = config.spin_b;
                p.j = j;
                p.b1 = b1;
                p.b2 = b2;
                p.kbt = config.kbt;
                p.meas_a = config.meas_a;
                p.meas_b = config.meas_b;
                p.outputs = config.outputs;
                points.push_back(p);
            }

    std::vector<std::string> rows(points.size());
    const auto render = [&](size_t i) {
        const SweepRecord r = evaluate_point(points[i]);
        rows[i] = (format == SweepFormat::Csv) ? to_csv_row(r) : to_json_object(r);
    };

    if (threads < 1) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads == 1 || points.size() < 2) {
        for (size_t i = 0; i < points.size(); ++i) render(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        const size_t workers = std::min<size_t>(static_cast<size_t>(threads), points.size());
        pool.reserve(workers);
        for (size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1)) render(i);
            });
        for (std::thread& t : pool) t.join();
    }

    if (format == SweepFormat::Csv) {
        out << csv_header() << '\n';
        for (const std::string& row : rows) out << row << '\n';
    } else {
        out << "[\n";
        for (size_t i = 0; i < rows.size(); ++i) out << "  " << rows[i] << (i + 1 < rows.size() ? ",\n" : "\n");
        out << "]\n";
    }
}

}  // namespace heatengine
