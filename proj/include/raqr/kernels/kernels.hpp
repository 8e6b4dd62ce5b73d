#pragma once

#include <cstddef>
#include <string>

namespace raqr::kernels {

enum class Backend { Scalar, Avx2 };

/// True when the running CPU can execute the AVX2+FMA code path.
bool avx2_supported() noexcept;

/// Currently selected backend (auto-detected on first use).
Backend active_backend() noexcept;

/// Force a backend. Throws raqr::ConfigError if the CPU cannot run it.
void set_backend(Backend b);

/// Parse "auto" | "scalar" | "avx2" and apply it.
void set_backend(const std::string& name);

const char* backend_name(Backend b) noexcept;

// ---------------------------------------------------------------------------
// Elementwise transcendentals. Scalar path defers to libm; the AVX2 path uses
// polynomial kernels accurate to a few ulp over the argument ranges the
// simulator produces (|x| <= ~1e6 for trig, x in [-745, 709] for exp).
// ---------------------------------------------------------------------------

void vexp(const double* x, double* out, std::size_t n);
void vsincos(const double* x, double* sin_out, double* cos_out, std::size_t n);

// ---------------------------------------------------------------------------
// Weighted reductions used by the trapezoidal quadratures of the frequency
// estimator. dot2 = sum a*b, dot3 = sum a*b*c, dot4 = sum a*b*c*d.
// ---------------------------------------------------------------------------

double dot2(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
double dot4(const double* a, const double* b, const double* c, const double* d,
            std::size_t n);

// ---------------------------------------------------------------------------
// Fused receiver transfer-curve evaluation over a detuning array at a fixed
// RF Rabi frequency. Coefficients are precomputed once per trace:
//
//   den(x)  = k_den0 + c3 * x^2
//   pi(x)   = v_in * exp(-k_exp / den)
//   ups(x)  = -pi(x) * (k_ups0 + k_ups2 * x^2) / den^2
//
// which is the rational-exponential bias curve and its analytic Rabi
// derivative. Zero-Rabi degenerate inputs are handled by the caller.
// ---------------------------------------------------------------------------

struct BiasGainCoeffs {
    double k_den0 = 0.0;  // C1*Omega^4 + C2*Omega^2
    double c3 = 0.0;      // C3
    double k_exp = 0.0;   // B1*C0*Omega^4
    double k_ups0 = 0.0;  // B1*C0*Omega^3 * 2*C2*Omega^2
    double k_ups2 = 0.0;  // B1*C0*Omega^3 * 4*C3
    double v_in = 0.0;
};

void bias_gain(const double* delta, double* pi_out, double* upsilon_out,
               std::size_t n, const BiasGainCoeffs& k);

// Scalar reference implementations, always available regardless of the active
// backend. Equivalence tests compare the dispatched path against these.
namespace scalar {
void vexp(const double* x, double* out, std::size_t n);
void vsincos(const double* x, double* s, double* c, std::size_t n);
double dot2(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
double dot4(const double* a, const double* b, const double* c, const double* d,
            std::size_t n);
void bias_gain(const double* delta, double* pi_out, double* upsilon_out,
               std::size_t n, const BiasGainCoeffs& k);
}  // namespace scalar

#if defined(RAQR_HAVE_AVX2_TU)
namespace avx2 {
void vexp(const double* x, double* out, std::size_t n);
void vsincos(const double* x, double* s, double* c, std::size_t n);
double dot2(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
double dot4(const double* a, const double* b, const double* c, const double* d,
            std::size_t n);
void bias_gain(const double* delta, double* pi_out, double* upsilon_out,
               std::size_t n, const BiasGainCoeffs& k);
}  // namespace avx2
#endif

}  // namespace raqr::kernels
