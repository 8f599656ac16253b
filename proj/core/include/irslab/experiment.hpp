// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irslab/channel.hpp"
#include "irslab/curve.hpp"
#include "irslab/monte_carlo.hpp"
#include "irslab/quadrature.hpp"

namespace irslab {

enum class Command { outage, diagnostics, diversity };

/// Configuration error (bad flags/config file); exit code 1.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Output error; exit code 3.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Process exit codes of the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,
    kExitNumerical = 2,
    kExitIo = 3,
};

/// A full experiment description. Precedence: built-in defaults, then
/// config file keys, then command-line flags (the CLI applies flags after
/// load_config_file).
struct ExperimentSpec {
    Command command = Command::outage;
    PhaseMode mode = PhaseMode::perfect;
    std::vector<std::string> methods = {"analytic"};  // analytic|mc|clt|asymptotic

    int n_elements = 8;
    double sigma_d = 1.0;
    double gamma_th_db = 0.0;
    double snr_from_db = -30.0;
    double snr_to_db = 0.0;
    int snr_points = 16;

    McConfig mc;
    QuadratureSpec quad = default_quadrature_spec();

    std::string out_path;  // empty: stdout
    std::string svg_path;  // empty: no plot

    // diagnostics command
    std::vector<int> diag_n = {4, 8, 16, 32, 64};
    std::vector<double> diag_epsilons = {0.1, 0.3, 0.5};

    // diversity command
    std::optional<std::pair<double, double>> fit_range_db;

    std::vector<double> gamma_grid_db() const;
    void validate() const;  // throws ConfigError
};

/// Flat key=value config file ('#' comments, blank lines ignored).
/// Unknown keys are rejected. Values use the same spellings as the flags.
void load_config_file(ExperimentSpec& spec, const std::string& path);

/// Apply one key=value setting (shared by the config file and the CLI).
void apply_setting(ExperimentSpec& spec, const std::string& key, const std::string& value);

/// Renderers (pure; byte-deterministic for identical inputs).
std::string render_outage_csv(const std::vector<OutageCurve>& curves);
std::string render_diversity_csv(const std::vector<struct DiversityRow>& rows);
std::string render_diagnostics_csv(const std::vector<struct DiagnosticsRow>& rows);
std::string render_svg(const std::vector<OutageCurve>& curves, double gamma_th_db);

struct DiversityRow {
    std::string mode;
    int n_elements = 0;
    long long order_num = 0;
    long long order_den = 1;
    double fitted_slope = 0.0;
    double fit_from_db = 0.0;
    double fit_to_db = 0.0;
    int n_points = 0;
};

struct DiagnosticsRow {
    std::string name;
    std::optional<int> n;
    std::optional<double> epsilon;
    double value_nats = 0.0;
};

/// Execute one experiment; throws ConfigError / IoError / numeric errors.
void run_outage(const ExperimentSpec& spec);
void run_diversity(const ExperimentSpec& spec);
void run_diagnostics(const ExperimentSpec& spec);

/// Dispatch + exception-to-exit-code mapping (never throws).
int run_experiment(const ExperimentSpec& spec) noexcept;

}  // namespace irslab
