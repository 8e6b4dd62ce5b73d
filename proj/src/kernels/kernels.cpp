#include "raqr/kernels/kernels.hpp"

#include <atomic>
#include <cmath>

#include "raqr/errors.hpp"

namespace raqr::kernels {

namespace scalar {

void vexp(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(x[i]);
}

void vsincos(const double* x, double* s, double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = std::sin(x[i]);
        c[i] = std::cos(x[i]);
    }
}

double dot2(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i] * c[i];
    return acc;
}

double dot4(const double* a, const double* b, const double* c, const double* d,
            std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i] * c[i] * d[i];
    return acc;
}

void bias_gain(const double* delta, double* pi_out, double* upsilon_out,
               std::size_t n, const BiasGainCoeffs& k) {
    for (std::size_t i = 0; i < n; ++i) {
        const double d2 = delta[i] * delta[i];
        const double den = k.k_den0 + k.c3 * d2;
        const double pi_v = k.v_in * std::exp(-k.k_exp / den);
        pi_out[i] = pi_v;
        upsilon_out[i] = -pi_v * (k.k_ups0 + k.k_ups2 * d2) / (den * den);
    }
}

}  // namespace scalar

bool avx2_supported() noexcept {
#if defined(RAQR_HAVE_AVX2_TU) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {
std::atomic<Backend> g_backend{avx2_supported() ? Backend::Avx2 : Backend::Scalar};
}

Backend active_backend() noexcept { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_supported())
        throw ConfigError("kernel backend 'avx2' requested but the CPU lacks AVX2/FMA");
    g_backend.store(b, std::memory_order_relaxed);
}

void set_backend(const std::string& name) {
    if (name == "auto")
        g_backend.store(avx2_supported() ? Backend::Avx2 : Backend::Scalar,
                        std::memory_order_relaxed);
    else if (name == "scalar")
        set_backend(Backend::Scalar);
    else if (name == "avx2")
        set_backend(Backend::Avx2);
    else
        throw ConfigError("unknown kernel backend '" + name + "' (use auto|scalar|avx2)");
}

const char* backend_name(Backend b) noexcept {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

#if defined(RAQR_HAVE_AVX2_TU)
#define RAQR_DISPATCH(fn, ...)                                        \
    do {                                                              \
        if (active_backend() == Backend::Avx2) return avx2::fn(__VA_ARGS__); \
        return scalar::fn(__VA_ARGS__);                               \
    } while (0)
#else
#define RAQR_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void vexp(const double* x, double* out, std::size_t n) { RAQR_DISPATCH(vexp, x, out, n); }

void vsincos(const double* x, double* s, double* c, std::size_t n) {
    RAQR_DISPATCH(vsincos, x, s, c, n);
}

double dot2(const double* a, const double* b, std::size_t n) {
    RAQR_DISPATCH(dot2, a, b, n);
}

double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    RAQR_DISPATCH(dot3, a, b, c, n);
}

double dot4(const double* a, const double* b, const double* c, const double* d,
            std::size_t n) {
    RAQR_DISPATCH(dot4, a, b, c, d, n);
}

void bias_gain(const double* delta, double* pi_out, double* upsilon_out,
               std::size_t n, const BiasGainCoeffs& k) {
    RAQR_DISPATCH(bias_gain, delta, pi_out, upsilon_out, n, k);
}

#undef RAQR_DISPATCH

}  // namespace raqr::kernels
