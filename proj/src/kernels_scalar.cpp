#include "fhs/simd.hpp"

namespace fhs::simd::kernels::scalar {

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double dot(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double wdot(const double* w, const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * (x[i] * y[i]);
    return s;
}

void cmul_real(const double* m, const std::complex<double>* z,
               std::complex<double>* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = {m[i] * z[i].real(), m[i] * z[i].imag()};
}

void cmul(const std::complex<double>* m, const std::complex<double>* z,
          std::complex<double>* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = m[i].real(), ai = m[i].imag();
        const double br = z[i].real(), bi = z[i].imag();
        out[i] = {ar * br - ai * bi, ar * bi + ai * br};
    }
}

void fft_butterfly(std::complex<double>* data, const std::complex<double>* tw,
                   std::size_t half) {
    for (std::size_t j = 0; j < half; ++j) {
        const double wr = tw[j].real(), wi = tw[j].imag();
        const double br = data[j + half].real(), bi = data[j + half].imag();
        const double tr = wr * br - wi * bi;
        const double ti = wr * bi + wi * br;
        const double ar = data[j].real(), ai = data[j].imag();
        data[j] = {ar + tr, ai + ti};
        data[j + half] = {ar - tr, ai - ti};
    }
}

}  // namespace fhs::simd::kernels::scalar
