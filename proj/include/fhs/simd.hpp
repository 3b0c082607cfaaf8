#pragma once

#include <complex>
#include <cstddef>
#include <string>

// Data-parallel inner loops used by the spectral operators, norms and the
// descent iterations. Every kernel has a scalar reference implementation and
// (on x86 with AVX2) a vectorized variant; the active backend is chosen at
// runtime from CPUID and can be overridden with the FHS_SIMD environment
// variable ("scalar", "avx2", "auto") or force_backend(). Pointwise kernels
// are bit-identical across backends; reductions may differ by summation
// order within ~1e-13 relative.

namespace fhs::simd {

enum class Backend { scalar, avx2 };

Backend active_backend();
void force_backend(Backend b);
bool avx2_supported();
std::string backend_name(Backend b);

namespace kernels {

// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);
// x[i] *= a
void scal(double a, double* x, std::size_t n);
// sum x[i]*y[i]
double dot(const double* x, const double* y, std::size_t n);
// sum w[i]*x[i]*y[i]
double wdot(const double* w, const double* x, const double* y, std::size_t n);
// out[i] = m[i] * z[i], real multiplier on complex data
void cmul_real(const double* m, const std::complex<double>* z,
               std::complex<double>* out, std::size_t n);
// out[i] = m[i] * z[i], complex multiplier on complex data
void cmul(const std::complex<double>* m, const std::complex<double>* z,
          std::complex<double>* out, std::size_t n);
// one radix-2 butterfly pass: for each pair (a=data[j], b=data[j+half]),
// t = tw[j]*b; data[j] = a+t; data[j+half] = a-t.  tw has `half` entries.
void fft_butterfly(std::complex<double>* data, const std::complex<double>* tw,
                   std::size_t half);

// Reference implementations, callable directly (equivalence tests, fallback).
namespace scalar {
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double wdot(const double* w, const double* x, const double* y, std::size_t n);
void cmul_real(const double* m, const std::complex<double>* z,
               std::complex<double>* out, std::size_t n);
void cmul(const std::complex<double>* m, const std::complex<double>* z,
          std::complex<double>* out, std::size_t n);
void fft_butterfly(std::complex<double>* data, const std::complex<double>* tw,
                   std::size_t half);
}  // namespace scalar

#ifdef FHS_BUILD_AVX2
namespace avx2 {
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double wdot(const double* w, const double* x, const double* y, std::size_t n);
void cmul_real(const double* m, const std::complex<double>* z,
               std::complex<double>* out, std::size_t n);
void cmul(const std::complex<double>* m, const std::complex<double>* z,
          std::complex<double>* out, std::size_t n);
void fft_butterfly(std::complex<double>* data, const std::complex<double>* tw,
                   std::size_t half);
}  // namespace avx2
#endif

}  // namespace kernels

}  // namespace fhs::simd
