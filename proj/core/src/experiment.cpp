// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors

#include "irslab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "irslab/asymptotics.hpp"
#include "irslab/diagnostics.hpp"
#include "irslab/outage.hpp"

namespace irslab {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string num(double v) { return fmt("%.12g", v); }

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = item.find_last_not_of(" \t");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for '" + key + "': " + value);
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer value for '" + key + "': " + value);
    }
}

}  // namespace

std::string method_name(OutageMethod m) {
    switch (m) {
        case OutageMethod::perfect: return "analytic_perfect";
        case OutageMethod::one_bit: return "analytic_one_bit";
        case OutageMethod::clt_perfect: return "clt_perfect";
        case OutageMethod::asymptotic_perfect: return "asymptotic_perfect";
        case OutageMethod::asymptotic_one_bit: return "asymptotic_one_bit";
        case OutageMethod::mc_perfect: return "mc_perfect";
        case OutageMethod::mc_one_bit: return "mc_one_bit";
    }
    return "unknown";
}

std::vector<double> ExperimentSpec::gamma_grid_db() const {
    std::vector<double> grid;
    grid.reserve(size_t(std::max(snr_points, 0)));
    if (snr_points == 1) {
        grid.push_back(snr_from_db);
        return grid;
    }
    const double step = (snr_to_db - snr_from_db) / double(snr_points - 1);
    for (int i = 0; i < snr_points; ++i) grid.push_back(snr_from_db + step * double(i));
    return grid;
}

void ExperimentSpec::validate() const {
    if (command == Command::outage && methods.empty())
        throw ConfigError("outage: select at least one method");
    for (const auto& m : methods) {
        if (m != "analytic" && m != "mc" && m != "clt" && m != "asymptotic")
            throw ConfigError("unknown method '" + m + "' (expected analytic|mc|clt|asymptotic)");
        if (m == "clt" && mode == PhaseMode::one_bit)
            throw ConfigError("the clt baseline exists for the perfect mode only");
    }
    if (n_elements < 0) throw ConfigError("n must be >= 0");
    if (!(sigma_d > 0.0)) throw ConfigError("sigma-d must be > 0");
    if (snr_points < 1) throw ConfigError("snr-points must be >= 1");
    if (snr_points > 1 && !(snr_to_db > snr_from_db))
        throw ConfigError("snr-to-db must exceed snr-from-db");
    try {
        quad.validate();
        mc.validate();
    } catch (const std::exception& ex) {
        throw ConfigError(ex.what());
    }
    for (const int n : diag_n)
        if (n < 1) throw ConfigError("diagnostics n values must be >= 1");
    for (const double e : diag_epsilons)
        if (e < -0.5 || e > 0.5) throw ConfigError("epsilon values must lie in [-0.5, 0.5]");
}

void apply_setting(ExperimentSpec& spec, const std::string& key, const std::string& value) {
    if (key == "mode") {
        if (value == "perfect") spec.mode = PhaseMode::perfect;
        else if (value == "one_bit") spec.mode = PhaseMode::one_bit;
        else throw ConfigError("mode must be perfect|one_bit, got '" + value + "'");
    } else if (key == "methods") {
        spec.methods = split_list(value);
    } else if (key == "n") {
        spec.diag_n.clear();
        for (const auto& item : split_list(value)) spec.diag_n.push_back(int(parse_int(key, item)));
        if (spec.diag_n.empty()) throw ConfigError("n: empty list");
        spec.n_elements = spec.diag_n.front();
    } else if (key == "sigma_d") {
        spec.sigma_d = parse_double(key, value);
    } else if (key == "snr_from_db") {
        spec.snr_from_db = parse_double(key, value);
    } else if (key == "snr_to_db") {
        spec.snr_to_db = parse_double(key, value);
    } else if (key == "snr_points") {
        spec.snr_points = int(parse_int(key, value));
    } else if (key == "gamma_th_db") {
        spec.gamma_th_db = parse_double(key, value);
    } else if (key == "seed") {
        spec.mc.seed = std::uint64_t(parse_int(key, value));
    } else if (key == "samples") {
        spec.mc.n_samples = std::uint64_t(parse_int(key, value));
    } else if (key == "streams") {
        spec.mc.n_streams = int(parse_int(key, value));
    } else if (key == "quad_abs_tol") {
        spec.quad.abs_tol = parse_double(key, value);
    } else if (key == "quad_rel_tol") {
        spec.quad.rel_tol = parse_double(key, value);
    } else if (key == "out") {
        spec.out_path = value;
    } else if (key == "svg") {
        spec.svg_path = value;
    } else if (key == "epsilons") {
        spec.diag_epsilons.clear();
        for (const auto& item : split_list(value)) spec.diag_epsilons.push_back(parse_double(key, item));
    } else if (key == "fit_from_db") {
        auto r = spec.fit_range_db.value_or(std::make_pair(0.0, 0.0));
        r.first = parse_double(key, value);
        spec.fit_range_db = r;
    } else if (key == "fit_to_db") {
        auto r = spec.fit_range_db.value_or(std::make_pair(0.0, 0.0));
        r.second = parse_double(key, value);
        spec.fit_range_db = r;
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

void load_config_file(ExperimentSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            const auto x = s.find_first_not_of(" \t\r");
            if (x == std::string::npos) return std::string();
            const auto y = s.find_last_not_of(" \t\r");
            return s.substr(x, y - x + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        apply_setting(spec, key, value);
    }
}

std::string render_outage_csv(const std::vector<OutageCurve>& curves) {
    std::string out = "method,n,sigma_d,gamma_th_db,gamma_t_db,p_out,std_err,n_samples,seed,error\n";
    for (const auto& c : curves) {
        for (const auto& p : c.points) {
            out += method_name(c.method);
            out += ',' + std::to_string(c.n_elements);
            out += ',' + num(c.sigma_d);
            out += ',' + num(c.gamma_th_db);
            out += ',' + num(p.gamma_t_db);
            out += ',';
            if (p.error.empty()) out += num(p.p_out);
            out += ',';
            if (p.std_err) out += fmt("%.6g", *p.std_err);
            out += ',';
            if (c.mc_samples) out += std::to_string(*c.mc_samples);
            out += ',';
            if (c.mc_seed) out += std::to_string(*c.mc_seed);
            out += ',' + p.error + "\n";
        }
    }
    return out;
}

std::string render_diversity_csv(const std::vector<DiversityRow>& rows) {
    std::string out = "mode,n,theoretical_order,theoretical_value,fitted_slope,fit_from_db,fit_to_db,n_points\n";
    for (const auto& r : rows) {
        out += r.mode + ',' + std::to_string(r.n_elements) + ',';
        out += std::to_string(r.order_num) + '/' + std::to_string(r.order_den) + ',';
        out += num(double(r.order_num) / double(r.order_den)) + ',';
        out += num(r.fitted_slope) + ',' + num(r.fit_from_db) + ',' + num(r.fit_to_db) + ',';
        out += std::to_string(r.n_points) + "\n";
    }
    return out;
}

std::string render_diagnostics_csv(const std::vector<DiagnosticsRow>& rows) {
    std::string out = "diagnostic_name,n,epsilon,value_nats\n";
    for (const auto& r : rows) {
        out += r.name + ',';
        if (r.n) out += std::to_string(*r.n);
        out += ',';
        if (r.epsilon) out += num(*r.epsilon);
        out += ',' + num(r.value_nats) + "\n";
    }
    return out;
}

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << content;
    if (!out) throw IoError("failed writing output file: " + path);
}

SystemConfig system_config_of(const ExperimentSpec& spec) {
    SystemConfig cfg;
    cfg.n_elements = spec.n_elements;
    cfg.sigma_d = spec.sigma_d;
    cfg.gamma_th_db = spec.gamma_th_db;
    cfg.gamma_t_grid_db = spec.gamma_grid_db();
    return cfg;
}

OutageMethod resolve_method(const std::string& name, PhaseMode mode) {
    if (name == "analytic") return mode == PhaseMode::perfect ? OutageMethod::perfect : OutageMethod::one_bit;
    if (name == "mc") return mode == PhaseMode::perfect ? OutageMethod::mc_perfect : OutageMethod::mc_one_bit;
    if (name == "clt") return OutageMethod::clt_perfect;
    return mode == PhaseMode::perfect ? OutageMethod::asymptotic_perfect : OutageMethod::asymptotic_one_bit;
}

}  // namespace

void run_outage(const ExperimentSpec& spec) {
    spec.validate();
    const SystemConfig cfg = system_config_of(spec);
    std::vector<OutageCurve> curves;
    for (const auto& m : spec.methods) {
        const OutageMethod method = resolve_method(m, spec.mode);
        if (method == OutageMethod::mc_perfect || method == OutageMethod::mc_one_bit)
            curves.push_back(mc_outage_curve(spec.mode, cfg, spec.mc));
        else
            curves.push_back(outage(method, cfg, spec.quad));
    }
    write_output(spec.out_path, render_outage_csv(curves));
    if (!spec.svg_path.empty()) write_output(spec.svg_path, render_svg(curves, spec.gamma_th_db));
}

void run_diversity(const ExperimentSpec& spec) {
    spec.validate();
    const SystemConfig cfg = system_config_of(spec);
    std::vector<DiversityRow> rows;
    for (const auto& m : spec.methods) {
        if (m == "clt") throw ConfigError("diversity: clt has no meaningful diversity order");
        const OutageMethod method = resolve_method(m, spec.mode);
        OutageCurve curve;
        if (method == OutageMethod::mc_perfect || method == OutageMethod::mc_one_bit)
            curve = mc_outage_curve(spec.mode, cfg, spec.mc);
        else
            curve = outage(method, cfg, spec.quad);
        const auto range = spec.fit_range_db.value_or(std::make_pair(spec.snr_from_db, spec.snr_to_db));
        const double slope = estimate_slope(curve, range);
        const Rational order = diversity_order(spec.mode, std::max(spec.n_elements, 1));
        DiversityRow row;
        row.mode = spec.mode == PhaseMode::perfect ? "perfect" : "one_bit";
        row.n_elements = spec.n_elements;
        row.order_num = order.num;
        row.order_den = order.den;
        row.fitted_slope = slope;
        row.fit_from_db = range.first;
        row.fit_to_db = range.second;
        int used = 0;
        for (const auto& p : curve.points)
            if (p.error.empty() && p.p_out > 0.0 && p.gamma_t_db >= std::min(range.first, range.second) &&
                p.gamma_t_db <= std::max(range.first, range.second))
                ++used;
        row.n_points = used;
        rows.push_back(std::move(row));
    }
    write_output(spec.out_path, render_diversity_csv(rows));
}

void run_diagnostics(const ExperimentSpec& spec) {
    spec.validate();
    std::vector<DiagnosticsRow> rows;
    for (const double eps : spec.diag_epsilons)
        for (const int n : spec.diag_n) {
            KlSpec ks{n, eps};
            rows.push_back({"kl_double_rayleigh_vs_gamma", n, eps,
                            kl_double_rayleigh_vs_gamma(ks, spec.quad)});
        }
    for (const int n : spec.diag_n) {
        const auto ref = kl_student_t_vs_normal(n, spec.quad);
        rows.push_back({"kl_student_t_vs_normal", n, std::nullopt, ref.nats});
    }
    rows.push_back({"mutual_information_xy", std::nullopt, std::nullopt, mutual_information_xy(spec.quad)});
    write_output(spec.out_path, render_diagnostics_csv(rows));
}

int run_experiment(const ExperimentSpec& spec) noexcept {
    try {
        switch (spec.command) {
            case Command::outage: run_outage(spec); break;
            case Command::diversity: run_diversity(spec); break;
            case Command::diagnostics: run_diagnostics(spec); break;
        }
        return kExitOk;
    } catch (const ConfigError& ex) {
        std::cerr << "irslab: config error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const IoError& ex) {
        std::cerr << "irslab: i/o error: " << ex.what() << "\n";
        return kExitIo;
    } catch (const std::exception& ex) {
        std::cerr << "irslab: numerical failure: " << ex.what() << "\n";
        return kExitNumerical;
    }
}

std::string render_svg(const std::vector<OutageCurve>& curves, double gamma_th_db) {
    // Minimal log-y outage plot: frame, decade gridlines, one polyline per
    // method. CSV remains the contract of record.
    constexpr double width = 640, height = 480;
    constexpr double ml = 70, mr = 20, mt = 20, mb = 50;
    double x_min = 1e300, x_max = -1e300, p_min = 1.0;
    for (const auto& c : curves)
        for (const auto& p : c.points) {
            if (!p.error.empty() || !(p.p_out > 0.0)) continue;
            x_min = std::min(x_min, p.gamma_t_db);
            x_max = std::max(x_max, p.gamma_t_db);
            p_min = std::min(p_min, p.p_out);
        }
    if (!(x_max > x_min)) {
        x_min = 0.0;
        x_max = 1.0;
    }
    const double y_lo = std::floor(std::log10(std::max(p_min, 1e-12)));
    const double y_hi = 0.0;
    const auto x_of = [&](double db) {
        return ml + (db - x_min) / (x_max - x_min) * (width - ml - mr);
    };
    const auto y_of = [&](double p) {
        const double l = std::log10(std::max(p, 1e-300));
        return mt + (y_hi - l) / (y_hi - y_lo) * (height - mt - mb);
    };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << (width - ml - mr) << "\" height=\""
        << (height - mt - mb) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double d = y_lo; d <= y_hi + 0.5; d += 1.0) {
        const double y = y_of(std::pow(10.0, d));
        svg << "<line x1=\"" << ml << "\" y1=\"" << y << "\" x2=\"" << (width - mr) << "\" y2=\"" << y
            << "\" stroke=\"#cccccc\" stroke-dasharray=\"3,3\"/>\n";
        svg << "<text x=\"" << (ml - 8) << "\" y=\"" << (y + 4)
            << "\" text-anchor=\"end\" font-size=\"11\">1e" << int(d) << "</text>\n";
    }
    const int x_ticks = 6;
    for (int i = 0; i <= x_ticks; ++i) {
        const double db = x_min + (x_max - x_min) * double(i) / double(x_ticks);
        svg << "<text x=\"" << x_of(db) << "\" y=\"" << (height - mb + 18)
            << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt("%.3g", db) << "</text>\n";
    }
    svg << "<text x=\"" << (ml + (width - ml - mr) / 2) << "\" y=\"" << (height - 10)
        << "\" text-anchor=\"middle\" font-size=\"12\">transmit SNR (dB), threshold "
        << fmt("%.3g", gamma_th_db) << " dB</text>\n";
    svg << "<text x=\"16\" y=\"" << (mt + (height - mt - mb) / 2)
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
        << (mt + (height - mt - mb) / 2) << ")\">outage probability</text>\n";
    int ci = 0;
    for (const auto& c : curves) {
        const char* color = colors[ci % 7];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& p : c.points) {
            if (!p.error.empty() || !(p.p_out > 0.0)) continue;
            svg << fmt("%.2f", x_of(p.gamma_t_db)) << ',' << fmt("%.2f", y_of(p.p_out)) << ' ';
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << (ml + 10) << "\" y=\"" << (mt + 16 + 14 * ci) << "\" font-size=\"11\" fill=\""
            << color << "\">" << method_name(c.method) << " (N=" << c.n_elements << ")</text>\n";
        ++ci;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace irslab
