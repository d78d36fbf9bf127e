#ifndef QHO_MATERIALS_HPP
#define QHO_MATERIALS_HPP

#include <string>

namespace qho {

// Al(x)Ga(1-x)As material parameters in the direct-gap regime.
struct MaterialParams {
    double x;           // alloy fraction, 0 <= x <= 0.45
    double eps_r;       // relative permittivity
    double m_eff_ratio; // m*/m_e
};

// Linear alloy interpolation, eps_r(x) = 12.90 - 2.84 x and
// m*(x)/m_e = 0.063 + 0.083 x. The coefficients are a fit through the
// published GaAs, Al0.25Ga0.75As and Al0.3Ga0.7As parameter sets (all three
// reproduced within 0.5%); users with better material data can override via
// material_from_file().
inline constexpr double eps_r_gaas = 12.90;
inline constexpr double eps_r_slope = -2.84;
inline constexpr double m_eff_gaas = 0.063;
inline constexpr double m_eff_slope = 0.083;
inline constexpr double x_direct_gap_max = 0.45;

// Throws std::domain_error if the parameters are unphysical.
void validate(const MaterialParams& mat);

// Material at alloy fraction x in [0, 0.45]; throws std::domain_error outside.
MaterialParams material_at(double x);

// Explicit override from a JSON file with fields {x, eps_r, m_eff_ratio}.
MaterialParams material_from_file(const std::string& path);

} // namespace qho

#endif
