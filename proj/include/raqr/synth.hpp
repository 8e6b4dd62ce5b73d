#pragma once

#include <cstdint>
#include <vector>

#include "raqr/afdm.hpp"
#include "raqr/rydberg.hpp"

namespace raqr::synth {

/// Radar geometry and environment. Collinear default geometry: the echo path
/// delay is tau = 2 L / c and the reference path delay is tau' = L' / c.
struct Scenario {
    double target_range = 0.0;   // L (m)
    double ref_range = 0.0;      // L' (m)
    double velocity = 0.0;       // v_r (m/s), radial; sign free
    double omega_rf = 0.0;       // carrier angular frequency (rad/s)
    double temperature = 0.0;    // T_E (K)
    double p_s = 0.0;            // received signal power (W)
    double h_gain = 1.0;         // LOS channel gain (dimensionless)
    double e_los = 0.0;          // LOS field amplitude at the cell (V/m)
    double k_b = 0.0;            // Boltzmann constant
    double c_light = 0.0;        // speed of light

    static Scenario table_defaults(const rydberg::AtomSystem& atom);

    void validate() const;

    double tau() const { return 2.0 * target_range / c_light; }
    double tau_ref() const { return ref_range / c_light; }
    /// Doppler shift nu_r = 2 v_r omega_RF / (2 pi c), cyclic Hz.
    double doppler_nu() const;
    /// Effective LOS amplitude of the normalized signal model, h / sqrt(N).
    double normalized_los_gain(int n_subcarriers) const;
};

enum class FrameTag : std::uint8_t { A = 0, B = 1 };

/// Sampled receiver output-voltage time series of one chirp subcarrier.
struct MeasurementTrace {
    FrameTag frame_tag = FrameTag::A;
    int subcarrier = 0;
    std::vector<double> times;        // absolute sample instants (s)
    std::vector<double> values;       // V_out samples (V)
    std::vector<double> bias_values;  // Pi at each sample (V)
    std::vector<double> noise_sigma;  // sigma_m(t) at each sample (V)
    std::uint64_t rng_seed = 0;
};

/// Per-sample receiver operating point along one subcarrier's trajectory.
struct ReadoutCurves {
    std::vector<double> delta;      // instantaneous detuning (rad/s)
    std::vector<double> bias;       // Pi (V)
    std::vector<double> gain;       // Upsilon (V per rad/s)
    std::vector<double> sigma_int2; // intrinsic variance (V^2)
    std::vector<double> sigma_ext2; // extrinsic variance (V^2)
    std::vector<double> sigma;      // total std dev (V)
};

/// Rabi frequency of the LOS reference at the cell (rad/s).
double reference_rabi(const Scenario& scenario, const rydberg::AtomSystem& atom);

/// Instantaneous detuning of the reference on subcarrier m at frame-local time
/// t (rad/s): the wrapped chirp frequency at the delayed argument t - tau',
/// with the carrier on resonance. Throws DomainError outside the frame.
double detuning_trajectory(double t, int m, const afdm::ChirpGrid& grid, double tau_ref);

struct NoiseVariances {
    double intrinsic = 0.0;  // V^2
    double extrinsic = 0.0;  // V^2
    double total = 0.0;      // V^2
};

/// Shot-noise (intrinsic) and blackbody-coupled (extrinsic) noise variances at
/// the instantaneous operating point.
NoiseVariances noise_variances(double t, int m, double omega_l,
                               const afdm::ChirpGrid& grid, const Scenario& scenario,
                               const rydberg::AtomSystem& atom);

/// Bose-Einstein occupancy of the blackbody field at the carrier.
double thermal_occupancy(double omega_rf, double temperature,
                         const rydberg::AtomSystem& atom);

/// Mean-square blackbody field intensity <E_I^2> (V/m)^2.
double blackbody_intensity(const Scenario& scenario, const rydberg::AtomSystem& atom);

/// Evaluate the full operating-point curves for subcarrier m on a frame-local
/// time grid (vectorized over the kernels backend).
ReadoutCurves evaluate_readout(const afdm::ChirpGrid& grid, int m,
                               const std::vector<double>& times_local,
                               const Scenario& scenario,
                               const rydberg::AtomSystem& atom);

/// Frame-local sample grid (t = k / f_s, k = 0 .. round(duration f_s) - 1).
std::vector<double> sample_grid(const afdm::ChirpGrid& grid, double f_s);

/// Synthesize the 2 N measurement traces of one dual-chirp transmission.
/// Noise substreams derive from (seed, frame, m); identical seeds give
/// bit-identical traces. Throws ConfigError when f_s < 4 max |omega_m|.
std::vector<MeasurementTrace> synthesize_trace(const afdm::DualChirpFrame& frame,
                                               const Scenario& scenario,
                                               const rydberg::AtomSystem& atom, double f_s,
                                               std::uint64_t seed,
                                               bool noise_enabled = true);

/// Average received SNR (dB) of a synthesized transmission: per frame,
/// (1/N) sum_m mean_t[ rho_m^2(t) ] * (h/sqrt(N))^2 * T, averaged over frames.
/// Returns snr_floor_db when the signal vanishes (h = 0 or P_s = 0).
double average_snr(const std::vector<MeasurementTrace>& traces,
                   const afdm::DualChirpFrame& frame, const Scenario& scenario,
                   const rydberg::AtomSystem& atom, double snr_floor_db = -400.0);

/// SNR of a hypothetical transmission with received power p_s (no synthesis).
double snr_for_power(double p_s, const afdm::DualChirpFrame& frame,
                     const Scenario& scenario, const rydberg::AtomSystem& atom,
                     double f_s);

/// Bisect p_s so the average SNR hits target_db within +/- 0.01 dB.
double calibrate_power_for_snr(double target_db, const afdm::DualChirpFrame& frame,
                               const Scenario& scenario,
                               const rydberg::AtomSystem& atom, double f_s);

}  // namespace raqr::synth
