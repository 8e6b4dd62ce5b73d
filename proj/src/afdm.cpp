#include "raqr/afdm.hpp"

#include <cmath>
#include <string>

#include "raqr/constants.hpp"
#include "raqr/errors.hpp"

namespace raqr::afdm {

ChirpGrid::ChirpGrid(int n_subcarriers, double dt, double frame_duration,
                     double post_chirp, double pre_chirp)
    : n(n_subcarriers),
      delta_t(dt),
      duration(frame_duration),
      c1(post_chirp),
      c2(pre_chirp),
      c1_tilde(post_chirp / (dt * dt)) {
    if (n < 1) throw DomainError("ChirpGrid: N >= 1 required, got " + std::to_string(n));
    if (!(delta_t > 0.0)) throw DomainError("ChirpGrid: delta_t must be positive");
    if (!(duration > 0.0)) throw DomainError("ChirpGrid: duration must be positive");
}

DualChirpFrame::DualChirpFrame(int n_subcarriers, double dt, double c1_a, double c1_b,
                               double pre_chirp, double split_fraction,
                               bool allow_single_chirp) {
    if (!(split_fraction > 0.0 && split_fraction < 1.0))
        throw DomainError("DualChirpFrame: split fraction must lie in (0, 1)");
    if (c1_a == c1_b && !allow_single_chirp)
        throw DomainError(
            "DualChirpFrame: c1_a == c1_b is the degenerate single-chirp case; "
            "construct with allow_single_chirp to compare against it");
    total_duration = n_subcarriers * dt;
    t_split = split_fraction * total_duration;
    frame_a = ChirpGrid(n_subcarriers, dt, t_split, c1_a, pre_chirp);
    frame_b = ChirpGrid(n_subcarriers, dt, total_duration - t_split, c1_b, pre_chirp);
}

DualChirpFrame DualChirpFrame::swapped() const {
    // exchange the chirp roles; each slot keeps its own time support
    DualChirpFrame out = *this;
    out.frame_a.c1 = frame_b.c1;
    out.frame_a.c1_tilde = frame_b.c1_tilde;
    out.frame_b.c1 = frame_a.c1;
    out.frame_b.c1_tilde = frame_a.c1_tilde;
    return out;
}

SymbolVector SymbolVector::all_ones(int n) {
    SymbolVector v;
    v.symbols.assign(static_cast<std::size_t>(n), {1.0, 0.0});
    return v;
}

SymbolVector SymbolVector::unit_impulse(int n, int position) {
    SymbolVector v;
    v.symbols.assign(static_cast<std::size_t>(n), {0.0, 0.0});
    v.symbols.at(static_cast<std::size_t>(position)) = {1.0, 0.0};
    return v;
}

std::vector<std::complex<double>> idaft_modulate(const SymbolVector& x,
                                                 const ChirpGrid& grid) {
    const auto n = static_cast<std::size_t>(grid.n);
    if (x.symbols.size() != n)
        throw DimensionError("idaft_modulate: symbol vector length " +
                             std::to_string(x.symbols.size()) + " != N = " +
                             std::to_string(grid.n));
    std::vector<std::complex<double>> s(n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(grid.n));
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m) {
            const double md = static_cast<double>(m);
            const double nd = static_cast<double>(k);
            const double phase = constants::two_pi *
                                 (grid.c2 * md * md + md * nd / grid.n + grid.c1 * nd * nd);
            acc += x.symbols[m] * std::polar(1.0, phase);
        }
        s[k] = norm * acc;
    }
    return s;
}

namespace {

// Unwrapped instantaneous frequency of subcarrier m at frame-local time t.
inline double unwrapped_freq(double t, int m, const ChirpGrid& grid) {
    return 2.0 * grid.c1_tilde * t + grid.subcarrier_spacing(m);
}

// Quadratic phase on a fixed wrap branch, in cycles.
inline double branch_phase(double t, int m, long q, const ChirpGrid& grid) {
    return grid.c1_tilde * t * t +
           (grid.subcarrier_spacing(m) - static_cast<double>(q) / grid.delta_t) * t;
}

}  // namespace

long wrap_index_at(double t, int m, const ChirpGrid& grid) {
    return static_cast<long>(std::floor(unwrapped_freq(t, m, grid) * grid.delta_t));
}

PhaseSample phase_phi(double t, int m, const ChirpGrid& grid) {
    if (!(t >= 0.0 && t <= grid.duration))
        throw DomainError("phase_phi: t = " + std::to_string(t) +
                          " outside frame [0, " + std::to_string(grid.duration) + "]");
    if (m < 0 || m >= grid.n)
        throw DomainError("phase_phi: subcarrier index " + std::to_string(m) +
                          " outside [0, " + std::to_string(grid.n) + ")");
    PhaseSample out;
    out.wrap_index = wrap_index_at(t, m, grid);
    out.instantaneous_freq =
        unwrapped_freq(t, m, grid) - static_cast<double>(out.wrap_index) / grid.delta_t;
    out.cycles = branch_phase(t, m, out.wrap_index, grid);
    return out;
}

double phase_difference(double t, double tau, double tau_ref, double nu_r, int m,
                        const ChirpGrid& grid, std::optional<long> wrap_override) {
    if (!(std::isfinite(t) && std::isfinite(tau) && std::isfinite(tau_ref) &&
          std::isfinite(nu_r)))
        throw DomainError("phase_difference: non-finite input");
    if (m < 0 || m >= grid.n)
        throw DomainError("phase_difference: subcarrier index out of range");
    const long q = wrap_override ? *wrap_override : wrap_index_at(t, m, grid);
    return branch_phase(t - tau, m, q, grid) - branch_phase(t - tau_ref, m, q, grid) +
           nu_r * t;
}

std::pair<double, double> ground_truth_fluctuation(const DualChirpFrame& frame, double tau,
                                                   double tau_ref, double nu_r) {
    const double d = tau - tau_ref;
    return {2.0 * frame.frame_a.c1_tilde * d - nu_r,
            2.0 * frame.frame_b.c1_tilde * d - nu_r};
}

}  // namespace raqr::afdm
