#include "qho/radial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <lapacke.h>

#include "qho/constants.hpp"

namespace qho {

namespace c = constants;

namespace {

constexpr double kRefineShiftTol = 5e-3;   // relative energy shift on grid doubling
constexpr double kTailFractionTol = 1e-6;  // |u| at the box edge vs max

void validate_grid(const RadialGrid& grid) {
    if (!(grid.r_max_nm > 0.0)) {
        throw std::domain_error("radial grid: r_max must be positive");
    }
    if (grid.n_points < 16) {
        throw std::domain_error("radial grid: n_points must be at least 16");
    }
}

// Lowest n_states eigenpairs of the symmetric tridiagonal discretization of
//   -(hbar^2/2m*) u'' + V(r) u = E u
// on interior points of the grid. V is supplied in meV over r in nm.
template <typename Potential>
std::vector<RadialSolution> solve_reduced(double m_eff_ratio, const RadialGrid& grid, int l,
                                          int n_states, Potential&& potential_mev,
                                          bool want_vectors) {
    const int n = grid.n_points - 1;  // interior points
    if (n_states < 1 || n_states > n) {
        throw std::domain_error("radial solve: n_states out of range");
    }
    const double h = grid.spacing_nm();
    const double kinetic = c::hbar2_over_2me_mev_nm2 / m_eff_ratio;  // hbar^2/2m*, meV nm^2
    const double off = -kinetic / (h * h);

    std::vector<double> diag(n), offdiag(n - 1, off);
    for (int i = 0; i < n; ++i) {
        const double r = (i + 1) * h;
        const double centrifugal = kinetic * l * (l + 1) / (r * r);
        diag[i] = 2.0 * kinetic / (h * h) + potential_mev(r) + centrifugal;
    }

    std::vector<double> energies(n);
    std::vector<double> vectors;
    std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n_states));
    lapack_int found = 0;
    lapack_int info;
    if (want_vectors) {
        vectors.resize(static_cast<std::size_t>(n) * n_states);
        info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), offdiag.data(), 0.0,
                              0.0, 1, n_states, 0.0, &found, energies.data(), vectors.data(), n,
                              isuppz.data());
    } else {
        info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'N', 'I', n, diag.data(), offdiag.data(), 0.0,
                              0.0, 1, n_states, 0.0, &found, energies.data(), nullptr, n,
                              isuppz.data());
    }
    if (info != 0 || found < n_states) {
        std::ostringstream msg;
        msg << "tridiagonal eigensolver failed (info=" << info << ", found=" << found
            << " of " << n_states << ")";
        throw numerical_error(msg.str());
    }

    std::vector<RadialSolution> solutions(static_cast<std::size_t>(n_states));
    for (int s = 0; s < n_states; ++s) {
        auto& sol = solutions[static_cast<std::size_t>(s)];
        sol.energy_mev = energies[static_cast<std::size_t>(s)];
        sol.l = l;
        sol.grid = grid;
        if (want_vectors) {
            sol.u.assign(vectors.begin() + static_cast<std::ptrdiff_t>(s) * n,
                         vectors.begin() + static_cast<std::ptrdiff_t>(s + 1) * n);
            // normalize: integral |u|^2 dr = 1 on the trapezoid-equivalent grid
            double norm2 = 0.0;
            for (double v : sol.u) norm2 += v * v;
            norm2 *= h;
            const double scale = 1.0 / std::sqrt(norm2);
            double max_abs = 0.0;
            for (double& v : sol.u) {
                v *= scale;
                max_abs = std::max(max_abs, std::fabs(v));
            }
            // positive-leading-lobe sign convention
            if (!sol.u.empty() && sol.u.front() < 0.0) {
                for (double& v : sol.u) v = -v;
            }
            if (std::fabs(sol.u.back()) > kTailFractionTol * max_abs) {
                std::ostringstream msg;
                msg << "state l=" << l << " #" << s << " has not decayed at r_max="
                    << grid.r_max_nm << " nm (tail " << std::fabs(sol.u.back()) / max_abs
                    << " of max); enlarge the box";
                throw convergence_error(msg.str());
            }
        }
    }
    return solutions;
}

template <typename Potential>
void check_refinement(double m_eff_ratio, const RadialGrid& grid, int l, int n_states,
                      Potential&& potential_mev, const std::vector<RadialSolution>& coarse) {
    RadialGrid fine{grid.r_max_nm, 2 * grid.n_points};
    auto refined = solve_reduced(m_eff_ratio, fine, l, n_states, potential_mev, false);
    for (int s = 0; s < n_states; ++s) {
        const double e0 = coarse[static_cast<std::size_t>(s)].energy_mev;
        const double e1 = refined[static_cast<std::size_t>(s)].energy_mev;
        const double scale = std::max(std::fabs(e0), std::fabs(e1));
        if (scale > 0.0 && std::fabs(e1 - e0) / scale > kRefineShiftTol) {
            std::ostringstream msg;
            msg << "grid too coarse: state l=" << l << " #" << s << " shifts from " << e0
                << " to " << e1 << " meV when n_points doubles (" << grid.n_points << " -> "
                << fine.n_points << ")";
            throw convergence_error(msg.str());
        }
    }
}

} // namespace

RadialGrid default_coulomb_grid(const MaterialParams& mat) {
    // 50 R1 box: even the n=2 orbital tail is below 1e-6 of its peak there
    return RadialGrid{50.0 * bohr_radius_nm(mat), 5000};
}

RadialGrid default_harmonic_grid(const DonorModel& model) {
    // box well beyond the classical turning point of the first ~8 levels
    const double k_mev_per_nm2 = model.k_spring_n_per_m / c::joule_per_mev * 1e-18;
    const double e_top = 10.0 * model.de_mev;
    const double r_turn = std::sqrt(2.0 * e_top / k_mev_per_nm2);
    return RadialGrid{std::max(3.0 * r_turn, 10.0 * model.r1_nm), 4000};
}

std::vector<RadialSolution> solve_coulomb(const MaterialParams& mat, const RadialGrid& grid,
                                          int l, int n_states) {
    validate(mat);
    validate_grid(grid);
    if (l < 0) throw std::domain_error("radial solve: l must be >= 0");
    auto coulomb = [&mat](double r_nm) { return -c::coulomb_mev_nm / (mat.eps_r * r_nm); };
    auto solutions = solve_reduced(mat.m_eff_ratio, grid, l, n_states, coulomb, true);
    check_refinement(mat.m_eff_ratio, grid, l, n_states, coulomb, solutions);
    return solutions;
}

double expected_radius_nm(const RadialSolution& sol) {
    const double h = sol.grid.spacing_nm();
    double norm2 = 0.0;
    double mean_r = 0.0;
    for (std::size_t i = 0; i < sol.u.size(); ++i) {
        const double r = (static_cast<double>(i) + 1.0) * h;
        const double w = sol.u[i] * sol.u[i] * h;
        norm2 += w;
        mean_r += r * w;
    }
    if (std::fabs(norm2 - 1.0) > 1e-6) {
        throw std::domain_error("expected radius: solution is not normalized");
    }
    return mean_r;
}

std::vector<HarmonicLevel> solve_harmonic(const DonorModel& model, const RadialGrid& grid,
                                          int l_max, int n_states_per_l) {
    validate_grid(grid);
    if (l_max < 0) throw std::domain_error("harmonic solve: l_max must be >= 0");
    const double k_mev_per_nm2 = model.k_spring_n_per_m / c::joule_per_mev * 1e-18;
    auto parabola = [k_mev_per_nm2](double r_nm) {
        return 0.5 * k_mev_per_nm2 * r_nm * r_nm;
    };
    std::vector<HarmonicLevel> levels;
    for (int l = 0; l <= l_max; ++l) {
        auto solutions = solve_reduced(model.material.m_eff_ratio, grid, l, n_states_per_l,
                                       parabola, true);
        check_refinement(model.material.m_eff_ratio, grid, l, n_states_per_l, parabola,
                         solutions);
        for (const auto& sol : solutions) {
            levels.push_back(HarmonicLevel{sol.energy_mev, l});
        }
    }
    std::sort(levels.begin(), levels.end(), [](const HarmonicLevel& a, const HarmonicLevel& b) {
        return a.energy_mev < b.energy_mev;
    });
    return levels;
}

std::vector<DistinctLevel> merge_levels(const std::vector<HarmonicLevel>& levels,
                                        double tol_mev) {
    std::vector<DistinctLevel> merged;
    for (const auto& level : levels) {
        const int weight = 2 * level.l + 1;
        if (!merged.empty() &&
            std::fabs(level.energy_mev - merged.back().energy_mev) <= tol_mev) {
            auto& group = merged.back();
            const double total = group.energy_mev * group.multiplicity +
                                 level.energy_mev * weight;
            group.multiplicity += weight;
            group.energy_mev = total / group.multiplicity;
        } else {
            merged.push_back(DistinctLevel{level.energy_mev, weight});
        }
    }
    return merged;
}

} // namespace qho
