// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
//
// irslab CLI: outage sweeps, accuracy diagnostics, and diversity-order
// fits for a reflecting-surface-assisted link with a direct path. All
// math lives in irslab::core; this file only maps flags onto an
// ExperimentSpec (precedence: defaults < config file < flags).

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <utility>

#include "irslab/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"outage analysis for a reflecting-surface-assisted fading link"};
    app.require_subcommand(1);

    // All values are kept as strings and funnelled through apply_setting,
    // so flags and config-file keys share one parser and one validator.
    std::string config, mode, methods, n_list, sigma_d, snr_from, snr_to, snr_points;
    std::string gamma_th, seed, samples, streams, out, svg, epsilons, fit_from, fit_to;
    std::string quad_abs, quad_rel;

    auto add_flags = [&](CLI::App* cmd) {
        cmd->add_option("--config", config, "flat key=value config file");
        cmd->add_option("--mode", mode, "perfect|one_bit");
        cmd->add_option("--methods", methods, "comma list: analytic,mc,clt,asymptotic");
        cmd->add_option("--n", n_list, "element count (comma list for diagnostics)");
        cmd->add_option("--sigma-d", sigma_d, "direct-link Rayleigh scale");
        cmd->add_option("--snr-from-db", snr_from, "sweep start (dB)");
        cmd->add_option("--snr-to-db", snr_to, "sweep end (dB)");
        cmd->add_option("--snr-points", snr_points, "grid size");
        cmd->add_option("--gamma-th-db", gamma_th, "SNR threshold (dB)");
        cmd->add_option("--seed", seed, "Monte-Carlo seed");
        cmd->add_option("--samples", samples, "Monte-Carlo samples per point");
        cmd->add_option("--streams", streams, "Monte-Carlo worker threads");
        cmd->add_option("--out", out, "output CSV path (default stdout)");
        cmd->add_option("--svg", svg, "also write a log-y SVG plot here");
        cmd->add_option("--epsilons", epsilons, "diagnostics: comma list of shape perturbations");
        cmd->add_option("--fit-from-db", fit_from, "diversity: fit window start (dB)");
        cmd->add_option("--fit-to-db", fit_to, "diversity: fit window end (dB)");
        cmd->add_option("--quad-abs-tol", quad_abs, "quadrature absolute tolerance");
        cmd->add_option("--quad-rel-tol", quad_rel, "quadrature relative tolerance");
    };

    auto* outage_cmd = app.add_subcommand("outage", "sweep outage probability vs transmit SNR");
    auto* diag_cmd = app.add_subcommand("diagnostics", "surrogate accuracy and dependence diagnostics");
    auto* div_cmd = app.add_subcommand("diversity", "fit high-SNR slopes against theoretical orders");
    add_flags(outage_cmd);
    add_flags(diag_cmd);
    add_flags(div_cmd);

    CLI11_PARSE(app, argc, argv);

    irslab::ExperimentSpec spec;
    if (outage_cmd->parsed()) spec.command = irslab::Command::outage;
    if (diag_cmd->parsed()) spec.command = irslab::Command::diagnostics;
    if (div_cmd->parsed()) spec.command = irslab::Command::diversity;

    try {
        if (!config.empty()) irslab::load_config_file(spec, config);
        const std::pair<const char*, const std::string*> flag_settings[] = {
            {"mode", &mode},           {"methods", &methods},
            {"n", &n_list},            {"sigma_d", &sigma_d},
            {"snr_from_db", &snr_from}, {"snr_to_db", &snr_to},
            {"snr_points", &snr_points}, {"gamma_th_db", &gamma_th},
            {"seed", &seed},           {"samples", &samples},
            {"streams", &streams},     {"out", &out},
            {"svg", &svg},             {"epsilons", &epsilons},
            {"fit_from_db", &fit_from}, {"fit_to_db", &fit_to},
            {"quad_abs_tol", &quad_abs}, {"quad_rel_tol", &quad_rel},
        };
        for (const auto& [key, value] : flag_settings)
            if (!value->empty()) irslab::apply_setting(spec, key, *value);
    } catch (const std::exception& ex) {
        std::cerr << "irslab: config error: " << ex.what() << "\n";
        return irslab::kExitConfig;
    }

    return irslab::run_experiment(spec);
}
