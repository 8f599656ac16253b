// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors
#pragma once

#include <vector>

namespace irslab {

/// Phase handling at the reflecting elements: ideal co-phasing, or a
/// one-bit shifter leaving a residual error uniform on [-pi/2, pi/2].
enum class PhaseMode { perfect, one_bit };

/// Link distances in meters (source->element, element->destination,
/// source->destination).
struct SystemGeometry {
    double d_sr = 40.0;
    double d_rd = 30.0;
    double d_sd = 50.0;

    void validate() const;
};

/// Linear power gains of the three hops plus the normalized direct-link
/// scale sigma_d = sqrt(2 xi_d / (xi1 xi2)).
struct LinkBudget {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi_d = 0.0;
    double sigma_d = 0.0;
};

/// One experiment's channel configuration. N = 0 is permitted as a
/// direct-only validation mode. sigma_d is first-class; derive it from
/// geometry via link_budget() when wanted.
struct SystemConfig {
    int n_elements = 8;
    double sigma_d = 1.0;
    double gamma_th_db = 0.0;
    std::vector<double> gamma_t_grid_db;

    void validate() const;  // N >= 0, sigma_d > 0, grid strictly increasing
};

/// Urban-microcell NLOS path loss at 5 GHz: -40.9 - 36.7 log10(d) dB.
double path_loss_db(double d_meters);

/// Linear gains and sigma_d from the three link distances.
LinkBudget link_budget(const SystemGeometry& geom);

/// Threshold the channel statistic is compared against:
/// amplitude sqrt(gamma_th/gamma_t) for the perfect mode (statistic H),
/// power gamma_th/gamma_t for the one-bit mode (statistic |G|^2).
double gain_threshold(double gamma_th_db, double gamma_t_db, PhaseMode mode);

/// dB <-> linear helpers (power quantities).
double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace irslab
