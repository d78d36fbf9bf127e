#include "qho/set_orthodox.hpp"

#include <cmath>
#include <sstream>

#include "qho/constants.hpp"

namespace qho {

namespace c = constants;

double SetParams::charging_energy_mev() const {
    // e/(2 C) in mV equals e^2/(2 C) in meV
    return c::e_charge_c / (2.0 * c_total_af() * 1e-18) * 1e3;
}

double SetParams::gate_period_mv() const {
    return c::e_charge_c / (c_gate_af * 1e-18) * 1e3;
}

double SetParams::gate_charge_e(double v_g_mv) const {
    return c_gate_af * v_g_mv * c::electrons_per_af_mv;
}

SetParams make_symmetric_set(double c_total_af, double c_gate_af, double r_total_kohm,
                             double temperature_k) {
    if (!(c_total_af > c_gate_af)) {
        throw std::domain_error("symmetric SET: total capacitance must exceed gate capacitance");
    }
    const double c_junction = 0.5 * (c_total_af - c_gate_af);
    SetParams params{c_junction, c_junction, c_gate_af,
                     0.5 * r_total_kohm, 0.5 * r_total_kohm, temperature_k};
    validate(params);
    return params;
}

void validate(const SetParams& params) {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw std::domain_error(std::string("SET params: ") + name + " must be positive");
        }
    };
    positive(params.c_source_af, "c_source_af");
    positive(params.c_drain_af, "c_drain_af");
    positive(params.c_gate_af, "c_gate_af");
    positive(params.r_source_kohm, "r_source_kohm");
    positive(params.r_drain_kohm, "r_drain_kohm");
    positive(params.temperature_k, "temperature_k");
}

std::vector<std::string> warnings(const SetParams& params) {
    std::vector<std::string> notes;
    const double ec = params.charging_energy_mev();
    const double kt = c::kb_mev_per_k * params.temperature_k;
    if (ec <= kt) {
        std::ostringstream msg;
        msg << "charging energy " << ec << " meV does not exceed kB T = " << kt
            << " meV; Coulomb blockade will be washed out";
        notes.push_back(msg.str());
    }
    return notes;
}

double tunneling_rate_per_s(double df_mev, double r_junction_kohm, double temperature_k) {
    if (!(r_junction_kohm > 0.0)) {
        throw std::domain_error("tunneling rate: junction resistance must be positive");
    }
    if (!(temperature_k > 0.0)) {
        throw std::domain_error("tunneling rate: temperature must be positive");
    }
    const double kt_mev = c::kb_mev_per_k * temperature_k;
    const double x = df_mev / kt_mev;
    // (-dF)/(1 - exp(dF/kT)) = kT * x/expm1(x); expm1 keeps both tails and the
    // x -> 0 limit (value 1) finite
    double reduced;
    if (x == 0.0) {
        reduced = 1.0;
    } else {
        reduced = x / std::expm1(x);
    }
    // kT/(e^2 R_j): meV -> J, kohm -> ohm
    const double prefactor = kt_mev * c::joule_per_mev /
                             (c::e_charge_c * c::e_charge_c * r_junction_kohm * 1e3);
    return prefactor * reduced;
}

double free_energy_change_mev(const SetParams& params, int n, Junction junction,
                              Direction direction, double v_ds_mv, double q0_e) {
    const double v_source_mv = -0.5 * v_ds_mv;
    const double v_drain_mv = +0.5 * v_ds_mv;
    // total induced charge on the island in units of e
    const double u = q0_e + (params.c_source_af * v_source_mv +
                             params.c_drain_af * v_drain_mv) * c::electrons_per_af_mv;
    const double ec = params.charging_energy_mev();
    const double v_lead_mv = junction == Junction::source ? v_source_mv : v_drain_mv;
    if (direction == Direction::onto_island) {
        return ec * (1.0 + 2.0 * n - 2.0 * u) + v_lead_mv;  // e * mV = meV
    }
    return ec * (1.0 - 2.0 * n + 2.0 * u) - v_lead_mv;
}

double ChargeStateDistribution::probability(int n) const {
    if (n < n_min || n > n_max) return 0.0;
    return probabilities[static_cast<std::size_t>(n - n_min)];
}

namespace {

constexpr double kBoundaryProbabilityTol = 1e-8;
constexpr int kInitialHalfWindow = 5;
constexpr int kMaxHalfWindow = 400;

struct RatePair {
    double onto;  // n -> n+1 through both junctions
    double off;   // n -> n-1 through both junctions
};

RatePair rates_at(const SetParams& params, int n, double v_ds_mv, double q0_e) {
    auto rate = [&](Junction j, Direction d) {
        const double df = free_energy_change_mev(params, n, j, d, v_ds_mv, q0_e);
        const double r = j == Junction::source ? params.r_source_kohm : params.r_drain_kohm;
        return tunneling_rate_per_s(df, r, params.temperature_k);
    };
    return RatePair{rate(Junction::source, Direction::onto_island) +
                        rate(Junction::drain, Direction::onto_island),
                    rate(Junction::source, Direction::off_island) +
                        rate(Junction::drain, Direction::off_island)};
}

// Stationary distribution over [n_min, n_max]. For this nearest-neighbor
// master equation the steady state has zero net flux across every bond, so
// log p(n+1) - log p(n) = log R_onto(n) - log R_off(n+1) anchored at the
// electrostatic optimum; accumulating in log space keeps the deep tails from
// underflowing the recursion.
ChargeStateDistribution solve_window(const SetParams& params, double v_ds_mv, double q0_e,
                                     int n_center, int half_window) {
    const int n_min = n_center - half_window;
    const int n_max = n_center + half_window;
    const int count = n_max - n_min + 1;
    std::vector<double> log_p(static_cast<std::size_t>(count));
    const int center_idx = n_center - n_min;
    log_p[static_cast<std::size_t>(center_idx)] = 0.0;
    for (int n = n_center; n < n_max; ++n) {
        const double up = rates_at(params, n, v_ds_mv, q0_e).onto;
        const double down = rates_at(params, n + 1, v_ds_mv, q0_e).off;
        if (!(down > 0.0)) {
            throw numerical_error("stationary distribution: vanishing relaxation rate at n=" +
                                  std::to_string(n + 1));
        }
        log_p[static_cast<std::size_t>(n + 1 - n_min)] =
            log_p[static_cast<std::size_t>(n - n_min)] + std::log(up) - std::log(down);
    }
    for (int n = n_center; n > n_min; --n) {
        const double down = rates_at(params, n, v_ds_mv, q0_e).off;
        const double up = rates_at(params, n - 1, v_ds_mv, q0_e).onto;
        if (!(up > 0.0)) {
            throw numerical_error("stationary distribution: vanishing excitation rate at n=" +
                                  std::to_string(n - 1));
        }
        log_p[static_cast<std::size_t>(n - 1 - n_min)] =
            log_p[static_cast<std::size_t>(n - n_min)] + std::log(down) - std::log(up);
    }
    double log_max = log_p[0];
    for (double v : log_p) log_max = std::max(log_max, v);
    ChargeStateDistribution dist{n_min, n_max, std::vector<double>(log_p.size())};
    double sum = 0.0;
    for (std::size_t i = 0; i < log_p.size(); ++i) {
        dist.probabilities[i] = std::exp(log_p[i] - log_max);
        sum += dist.probabilities[i];
    }
    if (!(sum > 0.0) || !std::isfinite(sum)) {
        throw numerical_error("stationary distribution: normalization failed");
    }
    for (double& p : dist.probabilities) p /= sum;
    return dist;
}

} // namespace

ChargeStateDistribution stationary_distribution(const SetParams& params, double v_ds_mv,
                                                double q0_e) {
    validate(params);
    const double u = q0_e + (params.c_source_af * (-0.5 * v_ds_mv) +
                             params.c_drain_af * (+0.5 * v_ds_mv)) * c::electrons_per_af_mv;
    const int n_center = static_cast<int>(std::lround(u));
    for (int half = kInitialHalfWindow; half <= kMaxHalfWindow; half += 5) {
        auto dist = solve_window(params, v_ds_mv, q0_e, n_center, half);
        if (dist.probabilities.front() < kBoundaryProbabilityTol &&
            dist.probabilities.back() < kBoundaryProbabilityTol) {
            return dist;
        }
    }
    std::ostringstream msg;
    msg << "stationary distribution: charge window exceeded " << kMaxHalfWindow
        << " states without boundary decay (v_ds=" << v_ds_mv << " mV, q0=" << q0_e << " e)";
    throw numerical_error(msg.str());
}

double current_pa(const SetParams& params, double v_ds_mv, double q0_e) {
    const auto dist = stationary_distribution(params, v_ds_mv, q0_e);
    double net_rate = 0.0;  // electrons island -> drain per second
    for (int n = dist.n_min; n <= dist.n_max; ++n) {
        const double p = dist.probability(n);
        if (p == 0.0) continue;
        const double off = tunneling_rate_per_s(
            free_energy_change_mev(params, n, Junction::drain, Direction::off_island, v_ds_mv,
                                   q0_e),
            params.r_drain_kohm, params.temperature_k);
        const double onto = tunneling_rate_per_s(
            free_energy_change_mev(params, n, Junction::drain, Direction::onto_island, v_ds_mv,
                                   q0_e),
            params.r_drain_kohm, params.temperature_k);
        net_rate += p * (off - onto);
    }
    return c::e_charge_c * net_rate * c::pa_per_amp;
}

Trace gate_sweep(const SetParams& params, double v_ds_mv, double vg_min_mv, double vg_max_mv,
                 double step_mv) {
    validate(params);
    if (!(step_mv > 0.0)) {
        throw std::domain_error("gate sweep: step must be positive");
    }
    if (!(vg_max_mv > vg_min_mv)) {
        throw std::domain_error("gate sweep: empty voltage range");
    }
    Trace trace;
    trace.x_label = "v_g_mv";
    trace.y_label = "current_pa";
    {
        std::ostringstream d;
        d << "gate sweep, v_ds=" << v_ds_mv << " mV, C_g=" << params.c_gate_af << " aF, T="
          << params.temperature_k << " K";
        trace.descriptor = d.str();
    }
    const auto n_steps = static_cast<std::size_t>((vg_max_mv - vg_min_mv) / step_mv) + 1;
    trace.x_mv.reserve(n_steps);
    trace.y_pa.reserve(n_steps);
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double v_g = vg_min_mv + static_cast<double>(i) * step_mv;
        trace.x_mv.push_back(v_g);
        trace.y_pa.push_back(current_pa(params, v_ds_mv, params.gate_charge_e(v_g)));
    }
    return trace;
}

Trace drain_sweep(const SetParams& params, double q0_e, double vds_min_mv, double vds_max_mv,
                  double step_mv) {
    validate(params);
    if (!(step_mv > 0.0)) {
        throw std::domain_error("drain sweep: step must be positive");
    }
    if (!(vds_max_mv > vds_min_mv)) {
        throw std::domain_error("drain sweep: empty voltage range");
    }
    Trace trace;
    trace.x_label = "v_ds_mv";
    trace.y_label = "current_pa";
    {
        std::ostringstream d;
        d << "drain sweep, q0=" << q0_e << " e, T=" << params.temperature_k << " K";
        trace.descriptor = d.str();
    }
    const auto n_steps = static_cast<std::size_t>((vds_max_mv - vds_min_mv) / step_mv) + 1;
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double v_ds = vds_min_mv + static_cast<double>(i) * step_mv;
        trace.x_mv.push_back(v_ds);
        trace.y_pa.push_back(current_pa(params, v_ds, q0_e));
    }
    return trace;
}

} // namespace qho
