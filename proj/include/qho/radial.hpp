#ifndef QHO_RADIAL_HPP
#define QHO_RADIAL_HPP

#include <stdexcept>
#include <vector>

#include "qho/hydrogenic.hpp"
#include "qho/materials.hpp"

namespace qho {

// Raised when an eigenvalue fails the grid-refinement check or a solution
// has not decayed at the box edge.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Uniform radial grid for the reduced equation u(r) = r psi(r).
// Interior points sit at r_i = i * spacing, i = 1 .. n_points-1, with
// u(0) = u(r_max) = 0 Dirichlet boundaries.
struct RadialGrid {
    double r_max_nm;
    int n_points;

    double spacing_nm() const { return r_max_nm / n_points; }
};

// Default verification grids, sized comfortably above the 10 R1 / 2000 point
// floor needed for sub-0.5% eigenvalues and fully decayed tails.
RadialGrid default_coulomb_grid(const MaterialParams& mat);
RadialGrid default_harmonic_grid(const DonorModel& model);

struct RadialSolution {
    double energy_mev;
    int l;                      // angular momentum quantum number
    RadialGrid grid;
    std::vector<double> u;      // reduced wavefunction on interior points, normalized
};

struct HarmonicLevel {
    double energy_mev;
    int l;
};

struct DistinctLevel {
    double energy_mev;    // mean of the merged group
    int multiplicity;     // sum of (2l+1) over merged entries
};

// Lowest n_states eigenpairs of the screened-Coulomb radial problem
//   -(hbar^2/2m*) u'' + [ -e^2/(4 pi eps_r eps0 r) + hbar^2 l(l+1)/(2m* r^2) ] u = E u
// in ascending energy order. Each energy is re-solved on a doubled grid and a
// convergence_error is thrown if any value shifts by more than 0.5%.
std::vector<RadialSolution> solve_coulomb(const MaterialParams& mat, const RadialGrid& grid,
                                          int l, int n_states);

// <r> = integral r |u|^2 dr, nm. Throws std::domain_error if u is not normalized.
double expected_radius_nm(const RadialSolution& sol);

// Radial solves of the parabolic potential V = 1/2 k r^2 for l = 0..l_max,
// merged and sorted ascending. Same convergence checking as solve_coulomb.
std::vector<HarmonicLevel> solve_harmonic(const DonorModel& model, const RadialGrid& grid,
                                          int l_max, int n_states_per_l);

// Group levels closer than tol_mev; multiplicity counts the (2l+1) magnetic
// degeneracy of each member.
std::vector<DistinctLevel> merge_levels(const std::vector<HarmonicLevel>& levels, double tol_mev);

} // namespace qho

#endif
