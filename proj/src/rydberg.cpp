#include "raqr/rydberg.hpp"

#include <cmath>
#include <string>

#include "raqr/constants.hpp"
#include "raqr/errors.hpp"

namespace raqr::rydberg {

namespace cn = raqr::constants;

AtomSystem AtomSystem::cesium_defaults() {
    AtomSystem a;
    a.omega_p_rabi = cn::two_pi * 5.8e6;
    a.omega_c_rabi = cn::two_pi * 1.0e6;
    a.gamma2 = cn::two_pi * 5.2e6;
    a.gamma3 = cn::two_pi * 10e3;
    a.gamma4 = cn::two_pi * 10e3;
    a.mu12 = 2.586 * cn::electron_charge * cn::bohr_radius;
    a.mu34 = 229.0 * cn::electron_charge * cn::bohr_radius;
    a.n0_density = 4.89e16;
    a.cell_length = 0.02;
    a.lambda_p = 852e-9;
    a.lambda_c = 509e-9;
    a.p_in = 100e-6;
    a.eta = 0.8;
    a.q_e = cn::electron_charge;
    a.r_load = 50.0;
    a.omega_p_optical = cn::two_pi * cn::speed_of_light / a.lambda_p;
    a.hbar = cn::hbar;
    a.epsilon0 = cn::epsilon0;
    a.c0_prefactor = 2.0;
    return a;
}

void AtomSystem::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) throw DomainError(std::string("AtomSystem: ") + name +
                                          " must be strictly positive");
    };
    positive(omega_p_rabi, "omega_p_rabi");
    positive(omega_c_rabi, "omega_c_rabi");
    positive(gamma2, "gamma2");
    positive(gamma3, "gamma3");
    positive(gamma4, "gamma4");
    positive(mu12, "mu12");
    positive(mu34, "mu34");
    positive(n0_density, "n0_density");
    positive(cell_length, "cell_length");
    positive(lambda_p, "lambda_p");
    positive(p_in, "p_in");
    positive(q_e, "q_e");
    positive(r_load, "r_load");
    positive(omega_p_optical, "omega_p_optical");
    positive(hbar, "hbar");
    positive(epsilon0, "epsilon0");
    positive(c0_prefactor, "c0_prefactor");
    if (!(eta > 0.0 && eta <= 1.0))
        throw DomainError("AtomSystem: eta must lie in (0, 1]");
    if (!(v_in() > 0.0)) throw DomainError("AtomSystem: derived V_in must be positive");
}

double AtomSystem::probe_wavenumber() const { return cn::two_pi / lambda_p; }

double AtomSystem::v_in() const {
    return r_load * q_e * eta * p_in / (hbar * omega_p_optical);
}

double AtomSystem::c0() const {
    return c0_prefactor * n0_density * mu12 * mu12 * probe_wavenumber() * cell_length /
           (epsilon0 * hbar * omega_p_rabi);
}

SteadyStateCoefficients SteadyStateCoefficients::from(const AtomSystem& atom) {
    const double op2 = atom.omega_p_rabi * atom.omega_p_rabi;
    const double oc2 = atom.omega_c_rabi * atom.omega_c_rabi;
    SteadyStateCoefficients k;
    k.a1 = 2.0 * atom.omega_p_rabi * oc2;
    k.b1 = atom.gamma2 * atom.omega_p_rabi;
    k.c1_coef = 2.0 * op2 + atom.gamma2 * atom.gamma2;
    k.c2_coef = 2.0 * op2 * (oc2 + op2);
    k.c3_coef = 4.0 * (oc2 + op2) * (oc2 + op2);
    return k;
}

std::complex<double> rho12_closed(double omega_rf, double delta_rf,
                                  const AtomSystem& atom) {
    if (omega_rf < 0.0) throw DomainError("rho12_closed: omega_rf must be >= 0");
    if (omega_rf == 0.0 && delta_rf == 0.0) return {0.0, 0.0};
    const auto k = SteadyStateCoefficients::from(atom);
    const double w2 = omega_rf * omega_rf;
    const double w4 = w2 * w2;
    const double d2 = delta_rf * delta_rf;
    const double den = k.c1_coef * w4 + k.c2_coef * w2 + k.c3_coef * d2;
    return {k.a1 * w2 * d2 / den, k.b1 * w4 / den};
}

double DensityMatrix::hermiticity_error() const {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_error() const {
    return std::abs(rho.trace() - std::complex<double>{1.0, 0.0});
}

namespace {

using Matrix16cd = Eigen::Matrix<std::complex<double>, 16, 16>;

constexpr int vec_index(int row, int col) { return 4 * col + row; }  // column-major

Eigen::Matrix4cd hamiltonian_over_hbar(double omega_rf, double delta_rf,
                                       const AtomSystem& atom) {
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    h(0, 1) = h(1, 0) = 0.5 * atom.omega_p_rabi;
    h(1, 2) = h(2, 1) = 0.5 * atom.omega_c_rabi;
    h(2, 3) = h(3, 2) = 0.5 * omega_rf;
    h(3, 3) = -delta_rf;
    return h;
}

// d(rho)/dt of the master equation; also used to validate the solution.
Eigen::Matrix4cd lindblad_rhs(const Eigen::Matrix4cd& rho, const Eigen::Matrix4cd& h,
                              const AtomSystem& atom) {
    const std::complex<double> i{0.0, 1.0};
    Eigen::Vector4d g{0.0, atom.gamma2, atom.gamma3, atom.gamma4};
    Eigen::Matrix4cd out = -i * (h * rho - rho * h);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) += -0.5 * (g(r) + g(c)) * rho(r, c);
    out(0, 0) += atom.gamma2 * rho(1, 1) + atom.gamma4 * rho(3, 3);
    out(1, 1) += atom.gamma3 * rho(2, 2);
    return out;
}

}  // namespace

DensityMatrix liouvillian_steady_state(double omega_rf, double delta_rf,
                                       const AtomSystem& atom) {
    if (omega_rf < 0.0)
        throw DomainError("liouvillian_steady_state: omega_rf must be >= 0");

    const Eigen::Matrix4cd h = hamiltonian_over_hbar(omega_rf, delta_rf, atom);
    const std::complex<double> i{0.0, 1.0};
    const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
    const Eigen::Vector4d g{0.0, atom.gamma2, atom.gamma3, atom.gamma4};

    Matrix16cd m = Matrix16cd::Zero();
    // vec(H rho - rho H) = (I (x) H - H^T (x) I) vec(rho), column-major vec
    for (int blk = 0; blk < 4; ++blk)
        m.block<4, 4>(4 * blk, 4 * blk) += -i * h;
    for (int br = 0; br < 4; ++br)
        for (int bc = 0; bc < 4; ++bc)
            m.block<4, 4>(4 * br, 4 * bc) += i * h(bc, br) * id;  // +i (rho H) term
    // anticommutator with Gamma and the repopulation matrix
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m(vec_index(r, c), vec_index(r, c)) += -0.5 * (g(r) + g(c));
    m(vec_index(0, 0), vec_index(1, 1)) += atom.gamma2;
    m(vec_index(0, 0), vec_index(3, 3)) += atom.gamma4;
    m(vec_index(1, 1), vec_index(2, 2)) += atom.gamma3;

    const double scale =
        std::max({atom.omega_p_rabi, atom.omega_c_rabi, atom.gamma2, std::abs(omega_rf),
                  std::abs(delta_rf), 1.0});

    Eigen::Matrix<std::complex<double>, 17, 16> a;
    a.topRows<16>() = m / scale;
    a.row(16).setZero();
    for (int d = 0; d < 4; ++d) a(16, vec_index(d, d)) = 1.0;
    Eigen::Matrix<std::complex<double>, 17, 1> b;
    b.setZero();
    b(16) = 1.0;

    Eigen::ColPivHouseholderQR<Eigen::Matrix<std::complex<double>, 17, 16>> qr(a);
    if (qr.rank() < 16)
        throw SolverError("liouvillian_steady_state: rank-deficient system (rank " +
                          std::to_string(qr.rank()) + " of 16); degenerate rates?");
    const Eigen::Matrix<std::complex<double>, 16, 1> v = qr.solve(b);

    DensityMatrix out;
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) out.rho(r, c) = v(vec_index(r, c));
    out.residual_norm = lindblad_rhs(out.rho, h, atom).norm();
    out.rate_scale = std::max(1.0, h.norm());
    if (!(out.residual_norm <= 1e-10 * out.rate_scale))
        throw SolverError("liouvillian_steady_state: residual " +
                          std::to_string(out.residual_norm) + " exceeds bound " +
                          std::to_string(1e-10 * out.rate_scale));
    return out;
}

kernels::BiasGainCoeffs bias_gain_coeffs(double omega, const AtomSystem& atom) {
    if (!(omega > 0.0)) throw DomainError("bias_gain_coeffs: omega must be > 0");
    const auto k = SteadyStateCoefficients::from(atom);
    const double w2 = omega * omega;
    const double w3 = w2 * omega;
    const double w4 = w2 * w2;
    const double b1c0 = k.b1 * atom.c0();
    kernels::BiasGainCoeffs out;
    out.k_den0 = k.c1_coef * w4 + k.c2_coef * w2;
    out.c3 = k.c3_coef;
    out.k_exp = b1c0 * w4;
    out.k_ups0 = b1c0 * w3 * 2.0 * k.c2_coef * w2;
    out.k_ups2 = b1c0 * w3 * 4.0 * k.c3_coef;
    out.v_in = atom.v_in();
    return out;
}

double bias_pi(double omega, double delta, const AtomSystem& atom) {
    if (omega < 0.0) throw DomainError("bias_pi: omega must be >= 0");
    if (omega == 0.0) return atom.v_in();
    const auto k = bias_gain_coeffs(omega, atom);
    double pi_v = 0.0, ups = 0.0;
    kernels::scalar::bias_gain(&delta, &pi_v, &ups, 1, k);
    return pi_v;
}

double gain_upsilon(double omega, double delta, const AtomSystem& atom) {
    if (omega < 0.0) throw DomainError("gain_upsilon: omega must be >= 0");
    if (omega == 0.0) return 0.0;
    const auto k = bias_gain_coeffs(omega, atom);
    double pi_v = 0.0, ups = 0.0;
    kernels::scalar::bias_gain(&delta, &pi_v, &ups, 1, k);
    return ups;
}

double transduce_voltage(double im_rho12, const AtomSystem& atom) {
    return atom.v_in() * std::exp(-atom.c0() * im_rho12);
}

}  // namespace raqr::rydberg
