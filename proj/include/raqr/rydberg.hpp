#pragma once

#include <Eigen/Dense>
#include <complex>

#include "raqr/kernels/kernels.hpp"

namespace raqr::rydberg {

/// All atomic, optical and photodetector constants of the four-level receiver.
/// Rabi frequencies, decay rates and detunings are angular (rad/s) throughout
/// this module.
struct AtomSystem {
    double omega_p_rabi = 0.0;   // probe Rabi (rad/s)
    double omega_c_rabi = 0.0;   // coupling Rabi (rad/s)
    double gamma2 = 0.0;         // decay rates (rad/s)
    double gamma3 = 0.0;
    double gamma4 = 0.0;
    double mu12 = 0.0;           // transition dipole moments (C m)
    double mu34 = 0.0;
    double n0_density = 0.0;     // atom density (m^-3)
    double cell_length = 0.0;    // vapor cell length (m)
    double lambda_p = 0.0;       // probe wavelength (m)
    double lambda_c = 0.0;       // coupling wavelength (m); stored, unused
    double p_in = 0.0;           // probe input power (W)
    double eta = 0.0;            // photodetector quantum efficiency
    double q_e = 0.0;            // electron charge (C)
    double r_load = 0.0;         // load impedance (Ohm)
    double omega_p_optical = 0.0;  // probe optical angular frequency (rad/s)
    double hbar = 0.0;
    double epsilon0 = 0.0;
    double c0_prefactor = 2.0;   // dimensionless multiplier in C0

    /// Cs ladder 6S1/2 -> 6P3/2 -> 60D5/2 -> 63P3/2 with the published
    /// simulation constants; gamma3/gamma4 default to 2*pi*10 kHz.
    static AtomSystem cesium_defaults();

    void validate() const;

    double probe_wavenumber() const;       // k_p = 2 pi / lambda_p
    double v_in() const;                   // R_T q eta P_in / (hbar omega_p)
    double c0() const;                     // optical-depth constant of the readout
};

/// Coefficients of the rational steady-state coherence.
struct SteadyStateCoefficients {
    double a1 = 0.0;       // 2 Omega_p Omega_c^2
    double b1 = 0.0;       // gamma2 Omega_p
    double c1_coef = 0.0;  // 2 Omega_p^2 + gamma2^2
    double c2_coef = 0.0;  // 2 Omega_p^2 (Omega_c^2 + Omega_p^2)
    double c3_coef = 0.0;  // 4 (Omega_c^2 + Omega_p^2)^2

    static SteadyStateCoefficients from(const AtomSystem& atom);
};

/// Numeric steady-state solution with solver diagnostics.
struct DensityMatrix {
    Eigen::Matrix4cd rho;
    double residual_norm = 0.0;  // Frobenius norm of d(rho)/dt at the solution (rad/s)
    double rate_scale = 0.0;     // max(1, ||H||_F / hbar) used for the residual bound

    double hermiticity_error() const;
    double trace_error() const;
};

/// Closed-form steady-state coherence rho_12 of the driven four-level ladder:
///   (A1 W^2 D^2 + j B1 W^4) / (C1 W^4 + C2 W^2 + C3 D^2)
/// Defined as 0 at the degenerate point W = D = 0.
std::complex<double> rho12_closed(double omega_rf, double delta_rf, const AtomSystem& atom);

/// Steady state of the Lindblad master equation, solved as the vectorized
/// affine fixed point with the unit-trace constraint. Throws SolverError when
/// the system is rank-deficient or the residual exceeds 1e-10 * rate_scale.
DensityMatrix liouvillian_steady_state(double omega_rf, double delta_rf,
                                       const AtomSystem& atom);

/// Probe-voltage bias curve Pi(W, D) = V_in exp(-B1 C0 W^4 / (C1 W^4 + C2 W^2 + C3 D^2)).
double bias_pi(double omega, double delta, const AtomSystem& atom);

/// Analytic partial derivative dPi/dW (V per rad/s): the receiver small-signal gain.
double gain_upsilon(double omega, double delta, const AtomSystem& atom);

/// Optical-to-voltage transduction V_in exp(-C0 * Im rho12).
double transduce_voltage(double im_rho12, const AtomSystem& atom);

/// Precomputed coefficients for fused array evaluation of (Pi, Upsilon) at a
/// fixed Rabi frequency; feeds kernels::bias_gain. Requires omega > 0.
kernels::BiasGainCoeffs bias_gain_coeffs(double omega, const AtomSystem& atom);

}  // namespace raqr::rydberg
