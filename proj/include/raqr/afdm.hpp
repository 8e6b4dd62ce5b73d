#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace raqr::afdm {

/// Chirp-grid parameters of one AFDM frame. Phase evaluation is on the
/// frame-local clock t in [0, duration]; subcarrier spacing is m/duration.
struct ChirpGrid {
    int n = 0;               // subcarrier count N
    double delta_t = 0.0;    // sample interval (s); chirps wrap on the 1/delta_t band
    double duration = 0.0;   // frame duration (s)
    double c1 = 0.0;         // post-chirp parameter (dimensionless)
    double c2 = 0.0;         // pre-chirp parameter (dimensionless)
    double c1_tilde = 0.0;   // c1 / delta_t^2 (Hz^2)

    ChirpGrid() = default;
    ChirpGrid(int n_subcarriers, double dt, double frame_duration, double post_chirp,
              double pre_chirp);

    double subcarrier_spacing(int m) const { return static_cast<double>(m) / duration; }
};

/// Two consecutive AFDM frames with distinct post-chirp rates. Constructing
/// with c1_a == c1_b throws unless allow_single_chirp is set (the degenerate
/// single-chirp baseline is only meaningful for comparison runs).
struct DualChirpFrame {
    ChirpGrid frame_a;
    ChirpGrid frame_b;
    double t_split = 0.0;        // T' (s), absolute start of frame B
    double total_duration = 0.0; // T (s)

    DualChirpFrame() = default;
    DualChirpFrame(int n_subcarriers, double dt, double c1_a, double c1_b, double pre_chirp,
                   double split_fraction = 0.5, bool allow_single_chirp = false);

    DualChirpFrame swapped() const;
};

/// DAFT-domain symbol vector x[m].
struct SymbolVector {
    std::vector<std::complex<double>> symbols;

    static SymbolVector all_ones(int n);
    static SymbolVector unit_impulse(int n, int position);
};

/// Inverse discrete affine Fourier transform:
///   s[n] = (1/sqrt(N)) sum_m x[m] exp(j 2 pi (c2 m^2 + m n / N + c1 n^2))
/// Throws DimensionError when x does not match grid.n.
std::vector<std::complex<double>> idaft_modulate(const SymbolVector& x,
                                                 const ChirpGrid& grid);

/// Piecewise chirp phase sample: phase in cycles, the active wrap branch q and
/// the wrapped instantaneous frequency (always in [0, 1/delta_t)).
struct PhaseSample {
    double cycles = 0.0;
    long wrap_index = 0;
    double instantaneous_freq = 0.0;  // Hz
};

/// phi_m(t) = c1_tilde t^2 + (m/T) t - (q/delta_t) t with q chosen so the
/// instantaneous frequency 2 c1_tilde t + m/T - q/delta_t lies in [0, 1/delta_t).
/// Throws DomainError for t outside [0, duration] or m outside [0, N).
PhaseSample phase_phi(double t, int m, const ChirpGrid& grid);

/// Wrap branch of subcarrier m at frame-local time t (no domain restriction).
long wrap_index_at(double t, int m, const ChirpGrid& grid);

/// Phase-profile difference between the target echo (delay tau) and the
/// line-of-sight reference (delay tau_ref), plus the Doppler ramp nu_r * t,
/// in cycles. Both delayed phases are evaluated on one wrap branch: the branch
/// of the undelayed time t by default, or the branch given in wrap_override
/// (trace synthesis pins the branch of the frame start so the result is affine
/// in t across the whole frame).
double phase_difference(double t, double tau, double tau_ref, double nu_r, int m,
                        const ChirpGrid& grid,
                        std::optional<long> wrap_override = std::nullopt);

/// Fluctuation frequencies (omega_a, omega_b) in Hz of the probe-voltage
/// oscillation for the two frames:
///   omega_x = 2 c1_tilde_x (tau - tau_ref) - nu_r
/// Identical for every subcarrier within a frame.
std::pair<double, double> ground_truth_fluctuation(const DualChirpFrame& frame, double tau,
                                                   double tau_ref, double nu_r);

}  // namespace raqr::afdm
