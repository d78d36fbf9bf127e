#include "qho/hydrogenic.hpp"

#include <cmath>
#include <stdexcept>

#include "qho/constants.hpp"

namespace qho {

namespace c = constants;

double binding_energy_mev(const MaterialParams& mat) {
    validate(mat);
    return mat.m_eff_ratio / (mat.eps_r * mat.eps_r) * c::e_hydrogen_mev;
}

double bohr_radius_nm(const MaterialParams& mat) {
    validate(mat);
    return mat.eps_r / mat.m_eff_ratio * c::r_bohr_nm;
}

double spring_constant_n_per_m(const MaterialParams& mat, double r_cloud_nm) {
    if (!(r_cloud_nm > 0.0)) {
        throw std::domain_error("spring constant: cloud radius must be positive");
    }
    // k = e^2 / (4 pi eps_r eps0 R^3); meV/nm^2 -> N/m
    const double k_mev_per_nm2 =
        c::coulomb_mev_nm / (mat.eps_r * r_cloud_nm * r_cloud_nm * r_cloud_nm);
    return k_mev_per_nm2 * c::joule_per_mev / 1e-18;
}

double level_spacing_mev(const MaterialParams& mat, double r_cloud_nm) {
    const double k = spring_constant_n_per_m(mat, r_cloud_nm);
    const double omega0 = std::sqrt(k / (mat.m_eff_ratio * c::m_electron_kg));
    return c::hbar_mev_ps * omega0 * 1e-12;  // rad/s -> rad/ps
}

DonorModel build_donor_model(const MaterialParams& mat) {
    validate(mat);
    DonorModel model;
    model.material = mat;
    model.e1_mev = binding_energy_mev(mat);
    model.r1_nm = bohr_radius_nm(mat);
    model.r_cloud_nm = 1.5 * model.r1_nm;
    model.k_spring_n_per_m = spring_constant_n_per_m(mat, model.r_cloud_nm);
    model.omega0_rad_per_s =
        std::sqrt(model.k_spring_n_per_m / (mat.m_eff_ratio * c::m_electron_kg));
    model.de_mev = c::hbar_mev_ps * model.omega0_rad_per_s * 1e-12;
    return model;
}

ForceResult restoring_force(const DonorModel& model,
                            const std::array<double, 3>& displacement_nm) {
    const double r2 = displacement_nm[0] * displacement_nm[0] +
                      displacement_nm[1] * displacement_nm[1] +
                      displacement_nm[2] * displacement_nm[2];
    ForceResult result;
    result.beyond_linear_regime = std::sqrt(r2) > model.r_cloud_nm;
    for (int i = 0; i < 3; ++i) {
        // nm -> m inside the Hooke law
        result.force_n[i] = -model.k_spring_n_per_m * displacement_nm[i] * 1e-9;
    }
    return result;
}

double harmonic_potential_mev(const DonorModel& model, double r_nm) {
    if (r_nm < 0.0) {
        throw std::domain_error("harmonic potential: r must be >= 0");
    }
    const double k_mev_per_nm2 = model.k_spring_n_per_m / c::joule_per_mev * 1e-18;
    return 0.5 * k_mev_per_nm2 * r_nm * r_nm;
}

QhoLadder build_ladder(const DonorModel& model, int n_levels) {
    if (n_levels < 1) {
        throw std::domain_error("ladder: n_levels must be >= 1");
    }
    QhoLadder ladder;
    ladder.de_mev = model.de_mev;
    ladder.levels_mev.reserve(static_cast<std::size_t>(n_levels));
    ladder.levels_mev.push_back(0.0);  // lowest donor orbital, at the minimum
    for (int n = 1; n < n_levels; ++n) {
        ladder.levels_mev.push_back((n + 0.5) * model.de_mev);
    }
    return ladder;
}

IsolationResult isolation_check(const DonorModel& model, double sheet_density_per_cm2) {
    if (!(sheet_density_per_cm2 > 0.0)) {
        throw std::domain_error("isolation check: sheet density must be positive");
    }
    // cm^-2 -> mean spacing in nm (1 cm = 1e7 nm)
    const double spacing_nm = 1.0 / std::sqrt(sheet_density_per_cm2) * 1e7;
    return IsolationResult{spacing_nm, spacing_nm > 2.0 * model.r1_nm};
}

} // namespace qho
