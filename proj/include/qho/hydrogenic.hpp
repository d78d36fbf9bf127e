#ifndef QHO_HYDROGENIC_HPP
#define QHO_HYDROGENIC_HPP

#include <array>
#include <vector>

#include "qho/materials.hpp"

namespace qho {

// Closed-form quantities of a shallow hydrogenic donor and the harmonic
// oscillator formed by displacing its electron cloud against the ion.
struct DonorModel {
    MaterialParams material;
    double e1_mev;            // ground-state binding energy, negative
    double r1_nm;             // effective Bohr radius
    double r_cloud_nm;        // expected radial distance of the cloud, 1.5 * r1
    double k_spring_n_per_m;  // restoring-force spring constant
    double omega0_rad_per_s;  // natural frequency
    double de_mev;            // oscillator level spacing, hbar * omega0
};

// Oscillator level list measured from the parabolic-potential minimum.
// levels[0] = 0 is the lowest donor orbital, degenerate with the minimum;
// the first oscillator state sits 1.5 * dE above it, then steps of dE.
struct QhoLadder {
    std::vector<double> levels_mev;
    double de_mev;
};

struct ForceResult {
    std::array<double, 3> force_n;  // Newtons
    bool beyond_linear_regime;      // |displacement| exceeded r_cloud
};

struct IsolationResult {
    double mean_spacing_nm;
    bool isolated;
};

// E1 = (1/eps_r^2)(m*/m_e) E_H, in meV (negative).
double binding_energy_mev(const MaterialParams& mat);

// R1 = eps_r (m_e/m*) R_H, in nm.
double bohr_radius_nm(const MaterialParams& mat);

// Spring constant e^2/(4 pi eps_r eps0 R^3) for a given cloud radius, N/m.
double spring_constant_n_per_m(const MaterialParams& mat, double r_cloud_nm);

// hbar * sqrt(k/m*) for a given cloud radius, meV.
double level_spacing_mev(const MaterialParams& mat, double r_cloud_nm);

DonorModel build_donor_model(const MaterialParams& mat);

// F = -k r, with the linear-regime flag raised when |r| > r_cloud.
ForceResult restoring_force(const DonorModel& model,
                            const std::array<double, 3>& displacement_nm);

// V(r) = 1/2 k r^2 in meV; r >= 0 required.
double harmonic_potential_mev(const DonorModel& model, double r_nm);

// n_levels >= 1 entries: [0, 1.5 dE, 2.5 dE, ...].
QhoLadder build_ladder(const DonorModel& model, int n_levels);

// Mean donor spacing density^(-1/2) against the 2 R1 isolation criterion.
// sheet_density in cm^-2; spacing reported in nm; isolated iff spacing > 2 R1.
IsolationResult isolation_check(const DonorModel& model, double sheet_density_per_cm2);

} // namespace qho

#endif
