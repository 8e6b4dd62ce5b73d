// AVX2+FMA kernel variants. Compiled with -mavx2 -mfma in its own TU and only
// dispatched to after a runtime CPU check. Polynomial coefficients are the
// classic Cephes minimax sets; arguments outside the fast-path range fall back
// to libm lane-by-lane so results stay well-defined everywhere.

#include "raqr/kernels/kernels.hpp"

#if defined(RAQR_HAVE_AVX2_TU)

#include <immintrin.h>

#include <cmath>
#include <cstdint>

namespace raqr::kernels::avx2 {

namespace {

constexpr double kLog2E = 1.4426950408889634073599246810019;
constexpr double kLn2Hi = 6.93145751953125e-1;
constexpr double kLn2Lo = 1.42860682030941723212e-6;
// Largest |x| for the polynomial exp path; beyond it results over/underflow
// into inf/subnormals and the scalar fallback takes over.
constexpr double kExpMax = 700.0;

// pi/2 in three non-overlapping chunks (33+33+tail bits); the j*PIO2_1 and
// j*PIO2_2 products are exact for |j| < 2^19, so the reduction error stays at
// the 1e-17 level over the fast-path range.
constexpr double kPio2_1 = 1.57079632673412561417e+00;
constexpr double kPio2_2 = 6.07710050630396597660e-11;
constexpr double kPio2_3 = 2.02226624879595063154e-21;
constexpr double kTwoOverPi = 6.36619772367581343076e-1;
constexpr double kTrigMax = 7.8e5;  // |j| < 2^19 guaranteed

constexpr double kSinCoef[6] = {
    1.58962301576546568060e-10, -2.50507477628578072866e-8,
    2.75573136213857245213e-6,  -1.98412698295895385996e-4,
    8.33333333332211858878e-3,  -1.66666666666666307295e-1,
};
constexpr double kCosCoef[6] = {
    -1.13585365213876817300e-11, 2.08757008419747316778e-9,
    -2.75573141792967388112e-7,  2.48015872888517179954e-5,
    -1.38888888888730564116e-3,  4.16666666666665929218e-2,
};

inline __m256d poly5(__m256d z, const double* c) {
    __m256d p = _mm256_set1_pd(c[0]);
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(c[1]));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(c[2]));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(c[3]));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(c[4]));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(c[5]));
    return p;
}

// exp on 4 lanes; valid for |x| <= kExpMax.
inline __m256d exp4(__m256d x) {
    const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLog2E)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Hi), x);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Lo), r);

    // degree-12 Taylor of exp on |r| <= ln2/2; ~1 ulp
    __m256d p = _mm256_set1_pd(1.0 / 479001600.0);
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    // fold in 2^k via exponent bits
    const __m128i ki = _mm256_cvtpd_epi32(k);
    const __m256i ki64 = _mm256_cvtepi32_epi64(ki);
    const __m256i bits =
        _mm256_slli_epi64(_mm256_add_epi64(ki64, _mm256_set1_epi64x(1023)), 52);
    return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

// sin/cos on 4 lanes; valid for |x| <= kTrigMax.
inline void sincos4(__m256d x, __m256d& s_out, __m256d& c_out) {
    const __m256d jd = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                                       _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    const __m128i ji = _mm256_cvtpd_epi32(jd);

    __m256d r = _mm256_fnmadd_pd(jd, _mm256_set1_pd(kPio2_1), x);
    r = _mm256_fnmadd_pd(jd, _mm256_set1_pd(kPio2_2), r);
    r = _mm256_fnmadd_pd(jd, _mm256_set1_pd(kPio2_3), r);

    const __m256d z = _mm256_mul_pd(r, r);
    // sin(r) = r + r*z*S(z); cos(r) = 1 - z/2 + z*z*C(z)
    const __m256d sr =
        _mm256_fmadd_pd(_mm256_mul_pd(r, z), poly5(z, kSinCoef), r);
    __m256d cr = _mm256_fnmadd_pd(z, _mm256_set1_pd(0.5), _mm256_set1_pd(1.0));
    cr = _mm256_fmadd_pd(_mm256_mul_pd(z, z), poly5(z, kCosCoef), cr);

    // quadrant selection: q=0:(s,c) q=1:(c,-s) q=2:(-s,-c) q=3:(-c,s)
    const __m128i q = _mm_and_si128(ji, _mm_set1_epi32(3));
    const __m256i q64 = _mm256_cvtepi32_epi64(q);
    const __m256d swap =
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q64, _mm256_set1_epi64x(1)),
                                               _mm256_set1_epi64x(1)));
    const __m256d q23 =
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q64, _mm256_set1_epi64x(2)),
                                               _mm256_set1_epi64x(2)));

    __m256d s = _mm256_blendv_pd(sr, cr, swap);
    __m256d c = _mm256_blendv_pd(cr, sr, swap);
    const __m256d negzero = _mm256_set1_pd(-0.0);
    // sin flips sign in quadrants 2,3; cos flips in 1,2 (i.e. q23 xor swap)
    s = _mm256_xor_pd(s, _mm256_and_pd(q23, negzero));
    c = _mm256_xor_pd(c, _mm256_and_pd(_mm256_xor_pd(q23, swap), negzero));
    s_out = s;
    c_out = c;
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline bool in_range(__m256d x, double limit) {
    const __m256d absx = _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
    const __m256d over = _mm256_cmp_pd(absx, _mm256_set1_pd(limit), _CMP_GT_OQ);
    return _mm256_movemask_pd(over) == 0;
}

}  // namespace

void vexp(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        if (in_range(xv, kExpMax)) {
            _mm256_storeu_pd(out + i, exp4(xv));
        } else {
            for (std::size_t j = i; j < i + 4; ++j) out[j] = std::exp(x[j]);
        }
    }
    for (; i < n; ++i) out[i] = std::exp(x[i]);
}

void vsincos(const double* x, double* s, double* c, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        if (in_range(xv, kTrigMax)) {
            __m256d sv, cv;
            sincos4(xv, sv, cv);
            _mm256_storeu_pd(s + i, sv);
            _mm256_storeu_pd(c + i, cv);
        } else {
            for (std::size_t j = i; j < i + 4; ++j) {
                s[j] = std::sin(x[j]);
                c[j] = std::cos(x[j]);
            }
        }
    }
    for (; i < n; ++i) {
        s[i] = std::sin(x[i]);
        c[i] = std::cos(x[i]);
    }
}

double dot2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c + i), acc);
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i] * b[i] * c[i];
    return r;
}

double dot4(const double* a, const double* b, const double* c, const double* d,
            std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        const __m256d cd = _mm256_mul_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i));
        acc = _mm256_fmadd_pd(ab, cd, acc);
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i] * b[i] * c[i] * d[i];
    return r;
}

void bias_gain(const double* delta, double* pi_out, double* upsilon_out,
               std::size_t n, const BiasGainCoeffs& k) {
    const __m256d den0 = _mm256_set1_pd(k.k_den0);
    const __m256d c3 = _mm256_set1_pd(k.c3);
    const __m256d kexp = _mm256_set1_pd(k.k_exp);
    const __m256d ups0 = _mm256_set1_pd(k.k_ups0);
    const __m256d ups2 = _mm256_set1_pd(k.k_ups2);
    const __m256d vin = _mm256_set1_pd(k.v_in);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_loadu_pd(delta + i);
        const __m256d d2 = _mm256_mul_pd(d, d);
        const __m256d den = _mm256_fmadd_pd(c3, d2, den0);
        const __m256d arg =
            _mm256_div_pd(_mm256_xor_pd(kexp, _mm256_set1_pd(-0.0)), den);
        const __m256d pi_v = _mm256_mul_pd(vin, exp4(arg));
        const __m256d num = _mm256_fmadd_pd(ups2, d2, ups0);
        const __m256d ups = _mm256_div_pd(
            _mm256_mul_pd(_mm256_xor_pd(pi_v, _mm256_set1_pd(-0.0)), num),
            _mm256_mul_pd(den, den));
        _mm256_storeu_pd(pi_out + i, pi_v);
        _mm256_storeu_pd(upsilon_out + i, ups);
    }
    if (i < n) scalar::bias_gain(delta + i, pi_out + i, upsilon_out + i, n - i, k);
}

}  // namespace raqr::kernels::avx2

#endif  // RAQR_HAVE_AVX2_TU
