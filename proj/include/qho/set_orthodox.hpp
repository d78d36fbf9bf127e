#ifndef QHO_SET_ORTHODOX_HPP
#define QHO_SET_ORTHODOX_HPP

#include <stdexcept>
#include <vector>

#include "qho/trace.hpp"

namespace qho {

struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Metallic SET island coupled to source/drain leads through tunnel junctions
// and to a gate capacitively. Normal-state orthodox (sequential-tunneling)
// transport; drain sits at +v_ds/2 and source at -v_ds/2.
struct SetParams {
    double c_source_af;
    double c_drain_af;
    double c_gate_af;
    double r_source_kohm;
    double r_drain_kohm;
    double temperature_k;

    double c_total_af() const { return c_source_af + c_drain_af + c_gate_af; }
    double charging_energy_mev() const;      // e^2 / (2 C_total)
    double gate_period_mv() const;           // e / C_gate
    double gate_charge_e(double v_g_mv) const;  // C_g V_g / e
};

// Symmetric-junction device built from a total capacitance and gate
// capacitance, splitting the remainder evenly across the two junctions.
SetParams make_symmetric_set(double c_total_af, double c_gate_af, double r_total_kohm,
                             double temperature_k);

// Throws std::domain_error on non-positive capacitances, resistances or
// temperature.
void validate(const SetParams& params);

// Non-empty when the blockade would be thermally washed out (E_C <= kB T).
std::vector<std::string> warnings(const SetParams& params);

enum class Junction { source, drain };
enum class Direction { onto_island, off_island };  // electron onto / off the island

// Golden-rule sequential tunneling rate across one junction,
//   Gamma = (1/e^2 R_j) * (-dF) / (1 - exp(dF / kB T)),
// overflow-safe for |dF| >> kB T and finite at dF = 0 (kB T / e^2 R_j).
double tunneling_rate_per_s(double df_mev, double r_junction_kohm, double temperature_k);

// Electrostatic free-energy change for moving one electron across the named
// junction, island occupation n, total gate/offset induced charge q0 (in e).
double free_energy_change_mev(const SetParams& params, int n, Junction junction,
                              Direction direction, double v_ds_mv, double q0_e);

struct ChargeStateDistribution {
    int n_min;
    int n_max;
    std::vector<double> probabilities;  // indexed n - n_min, sums to 1

    double probability(int n) const;
};

// Stationary solution of the sequential-tunneling master equation. The charge
// window starts +-5 states around the electrostatic optimum and widens until
// both boundary probabilities drop below 1e-8.
ChargeStateDistribution stationary_distribution(const SetParams& params, double v_ds_mv,
                                                double q0_e);

// Steady-state current through the drain junction, pA.
double current_pa(const SetParams& params, double v_ds_mv, double q0_e);

// I(V_g) at fixed drain-source bias; q0 = C_g V_g / e. Coulomb-blockade
// peaks appear with period e/C_g.
Trace gate_sweep(const SetParams& params, double v_ds_mv, double vg_min_mv,
                 double vg_max_mv, double step_mv);

// I(V_ds) at fixed induced charge; the blockade staircase of the bare device.
Trace drain_sweep(const SetParams& params, double q0_e, double vds_min_mv,
                  double vds_max_mv, double step_mv);

} // namespace qho

#endif
