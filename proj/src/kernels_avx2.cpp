#include "fhs/simd.hpp"

#include <immintrin.h>

// AVX2 variants. Pointwise kernels perform exactly the scalar per-element
// operations (mul/add, no FMA contraction), so they are bit-identical to the
// scalar reference; reductions use 4 lanes and differ only by summation order.

namespace fhs::simd::kernels::avx2 {

void axpy(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scal(double a, double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= a;
}

double dot(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i),
                                               _mm256_loadu_pd(y + i)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double wdot(const double* w, const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xy = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + i), xy));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) s += w[i] * (x[i] * y[i]);
    return s;
}

namespace {

// (ar+i*ai)*(br+i*bi) for two packed complex doubles; the addsub layout
// reproduces the scalar expressions (ar*br - ai*bi, ar*bi + ai*br) exactly.
inline __m256d complex_mul(__m256d a, __m256d b) {
    const __m256d ar = _mm256_movedup_pd(a);          // [ar0, ar0, ar1, ar1]
    const __m256d ai = _mm256_permute_pd(a, 0xF);     // [ai0, ai0, ai1, ai1]
    const __m256d bswap = _mm256_permute_pd(b, 0x5);  // [bi0, br0, bi1, br1]
    return _mm256_addsub_pd(_mm256_mul_pd(ar, b), _mm256_mul_pd(ai, bswap));
}

}  // namespace

void cmul_real(const double* m, const std::complex<double>* z,
               std::complex<double>* out, std::size_t n) {
    const double* zp = reinterpret_cast<const double*>(z);
    double* op = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m128d mv = _mm_loadu_pd(m + i);  // [m0, m1]
        const __m256d mm = _mm256_insertf128_pd(
            _mm256_castpd128_pd256(_mm_unpacklo_pd(mv, mv)), _mm_unpackhi_pd(mv, mv), 1);
        _mm256_storeu_pd(op + 2 * i,
                         _mm256_mul_pd(mm, _mm256_loadu_pd(zp + 2 * i)));
    }
    for (; i < n; ++i) out[i] = {m[i] * z[i].real(), m[i] * z[i].imag()};
}

void cmul(const std::complex<double>* m, const std::complex<double>* z,
          std::complex<double>* out, std::size_t n) {
    const double* mp = reinterpret_cast<const double*>(m);
    const double* zp = reinterpret_cast<const double*>(z);
    double* op = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(op + 2 * i, complex_mul(_mm256_loadu_pd(mp + 2 * i),
                                                 _mm256_loadu_pd(zp + 2 * i)));
    for (; i < n; ++i) {
        const double ar = m[i].real(), ai = m[i].imag();
        const double br = z[i].real(), bi = z[i].imag();
        out[i] = {ar * br - ai * bi, ar * bi + ai * br};
    }
}

void fft_butterfly(std::complex<double>* data, const std::complex<double>* tw,
                   std::size_t half) {
    double* dp = reinterpret_cast<double*>(data);
    const double* twp = reinterpret_cast<const double*>(tw);
    std::size_t j = 0;
    for (; j + 2 <= half; j += 2) {
        const __m256d w = _mm256_loadu_pd(twp + 2 * j);
        const __m256d b = _mm256_loadu_pd(dp + 2 * (j + half));
        const __m256d t = complex_mul(w, b);
        const __m256d a = _mm256_loadu_pd(dp + 2 * j);
        _mm256_storeu_pd(dp + 2 * j, _mm256_add_pd(a, t));
        _mm256_storeu_pd(dp + 2 * (j + half), _mm256_sub_pd(a, t));
    }
    for (; j < half; ++j) {
        const double wr = tw[j].real(), wi = tw[j].imag();
        const double br = data[j + half].real(), bi = data[j + half].imag();
        const double tr = wr * br - wi * bi;
        const double ti = wr * bi + wi * br;
        const double ar = data[j].real(), ai = data[j].imag();
        data[j] = {ar + tr, ai + ti};
        data[j + half] = {ar - tr, ai - ti};
    }
}

}  // namespace fhs::simd::kernels::avx2
