#ifndef QHO_CONSTANTS_HPP
#define QHO_CONSTANTS_HPP

#include <numbers>

// Physical constant registry (CODATA 2018) plus the derived factors used
// throughout. Internal unit convention: energies in meV, lengths in nm,
// capacitances in aF, voltages in mV, temperatures in K. All conversions to
// SI happen inside formula evaluation.
namespace qho::constants {

// SI base values
inline constexpr double hbar_js = 1.054571817e-34;          // J s
inline constexpr double e_charge_c = 1.602176634e-19;       // C
inline constexpr double eps0_f_per_m = 8.8541878128e-12;    // F/m
inline constexpr double m_electron_kg = 9.1093837015e-31;   // kg
inline constexpr double k_boltzmann_j_per_k = 1.380649e-23; // J/K

// hydrogen-atom reference scales
inline constexpr double e_hydrogen_mev = -13605.693122994; // ionization energy, meV
inline constexpr double r_bohr_nm = 5.29177210903e-2;      // Bohr radius, nm

// unit bridges
inline constexpr double joule_per_mev = 1e-3 * e_charge_c;
inline constexpr double pa_per_amp = 1e12;

// hbar in meV ps (0.6582119...)
inline constexpr double hbar_mev_ps = hbar_js / (joule_per_mev * 1e-12);
// Boltzmann constant in meV/K (0.0861733...)
inline constexpr double kb_mev_per_k = k_boltzmann_j_per_k / joule_per_mev;
// Coulomb factor e^2/(4 pi eps0) in meV nm (1439.9645...)
inline constexpr double coulomb_mev_nm =
    e_charge_c * e_charge_c / (4.0 * std::numbers::pi * eps0_f_per_m)
    / joule_per_mev * 1e9;
// hbar^2/(2 m_e) in meV nm^2 (38.0998...)
inline constexpr double hbar2_over_2me_mev_nm2 =
    hbar_js * hbar_js / (2.0 * m_electron_kg) / joule_per_mev * 1e18;
// Planck constant as meV per THz (4.1356676...)
inline constexpr double h_mev_per_thz =
    2.0 * std::numbers::pi * hbar_js / joule_per_mev * 1e12;

// gate charge helper: (aF * mV) / e, dimensionless electrons
inline constexpr double electrons_per_af_mv = 1e-21 / e_charge_c;

} // namespace qho::constants

#endif
