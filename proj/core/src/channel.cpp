// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the irslab authors

#include "irslab/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace irslab {

void SystemGeometry::validate() const {
    if (!(d_sr > 0.0 && d_rd > 0.0 && d_sd > 0.0))
        throw std::domain_error("SystemGeometry: all distances must be > 0");
}

void SystemConfig::validate() const {
    if (n_elements < 0) throw std::invalid_argument("SystemConfig: n_elements must be >= 0");
    if (!(sigma_d > 0.0)) throw std::invalid_argument("SystemConfig: sigma_d must be > 0");
    if (gamma_t_grid_db.empty()) throw std::invalid_argument("SystemConfig: empty gamma_t grid");
    for (size_t i = 1; i < gamma_t_grid_db.size(); ++i)
        if (!(gamma_t_grid_db[i] > gamma_t_grid_db[i - 1]))
            throw std::invalid_argument("SystemConfig: gamma_t grid must be strictly increasing");
}

double path_loss_db(double d_meters) {
    if (!(d_meters > 0.0)) throw std::domain_error("path_loss_db: distance must be > 0");
    return -40.9 - 36.7 * std::log10(d_meters);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

LinkBudget link_budget(const SystemGeometry& geom) {
    geom.validate();
    LinkBudget lb;
    lb.xi1 = db_to_linear(path_loss_db(geom.d_sr));
    lb.xi2 = db_to_linear(path_loss_db(geom.d_rd));
    lb.xi_d = db_to_linear(path_loss_db(geom.d_sd));
    lb.sigma_d = std::sqrt(2.0 * lb.xi_d / (lb.xi1 * lb.xi2));
    return lb;
}

double gain_threshold(double gamma_th_db, double gamma_t_db, PhaseMode mode) {
    const double ratio = db_to_linear(gamma_th_db - gamma_t_db);
    return mode == PhaseMode::perfect ? std::sqrt(ratio) : ratio;
}

}  // namespace irslab
