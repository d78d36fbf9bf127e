#ifndef QHO_COUPLING_HPP
#define QHO_COUPLING_HPP

#include <vector>

#include "qho/hydrogenic.hpp"
#include "qho/set_orthodox.hpp"
#include "qho/trace.hpp"

namespace qho {

// Stark readout calibration: a positive gate bias lowers the donor levels
// linearly (lever arm alpha) until they cross the 2DEG Fermi energy at
// v_threshold and fill sequentially; each captured electron shifts the SET
// island offset charge by kappa.
struct CouplingConfig {
    double lever_arm_mev_per_mv = 1.0;
    double v_threshold_mv = 500.0;
    double kappa_e = 0.1;
    double fermi_broadening_k = 0.3;  // thermal width of the level crossings
};

void validate(const CouplingConfig& cfg);

struct OccupancyProfile {
    std::vector<double> v_g_mv;
    std::vector<double> n_occupied;  // thermally smeared expected electron count
};

// Level positions relative to the Fermi energy at gate bias v_g:
//   D_n(v_g) = levels[n] + alpha (v_threshold - v_g).
// Level n crosses E_f at v_g = v_threshold + levels[n]/alpha.
std::vector<double> shifted_levels_mev(const QhoLadder& ladder, const CouplingConfig& cfg,
                                       double v_g_mv);

// Expected number of filled ladder states at one gate voltage,
// sum_n f(D_n / kB T_broadening).
double occupancy_at(const QhoLadder& ladder, const CouplingConfig& cfg, double v_g_mv);

OccupancyProfile occupancy(const QhoLadder& ladder, const CouplingConfig& cfg,
                           double vg_min_mv, double vg_max_mv, double step_mv);

// Gate sweep with the oscillator load: island offset charge
//   q0(v_g) = C_g v_g / e + kappa * n_occupied(v_g),
// so a slow CB oscillation everywhere plus fast features at the level
// crossings above threshold.
Trace coupled_sweep(const SetParams& params, const QhoLadder& ladder,
                    const CouplingConfig& cfg, double v_ds_mv, double vg_min_mv,
                    double vg_max_mv, double step_mv);

// alpha = dE / measured fast period; throws std::domain_error on non-positive
// inputs.
double calibrate_lever_arm(double measured_period_mv, double de_mev);

} // namespace qho

#endif
