#include "fhs/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace fhs::simd {

namespace {

bool cpu_has_avx2() {
#if defined(FHS_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect_backend() {
    if (const char* env = std::getenv("FHS_SIMD")) {
        const std::string s(env);
        if (s == "scalar") return Backend::scalar;
        if (s == "avx2") {
            if (!cpu_has_avx2())
                throw std::runtime_error("FHS_SIMD=avx2 requested but AVX2 is unavailable");
            return Backend::avx2;
        }
        // anything else (including "auto") falls through to detection
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{detect_backend()};
    return slot;
}

}  // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void force_backend(Backend b) {
    if (b == Backend::avx2 && !cpu_has_avx2())
        throw std::runtime_error("cannot force AVX2 backend: unsupported on this CPU/build");
    backend_slot().store(b, std::memory_order_relaxed);
}

bool avx2_supported() { return cpu_has_avx2(); }

std::string backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

namespace kernels {

#ifdef FHS_BUILD_AVX2
#define FHS_DISPATCH(fn, ...)                                  \
    do {                                                       \
        if (active_backend() == Backend::avx2)                 \
            return avx2::fn(__VA_ARGS__);                      \
        return scalar::fn(__VA_ARGS__);                        \
    } while (0)
#else
#define FHS_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void axpy(double a, const double* x, double* y, std::size_t n) {
    FHS_DISPATCH(axpy, a, x, y, n);
}

void scal(double a, double* x, std::size_t n) { FHS_DISPATCH(scal, a, x, n); }

double dot(const double* x, const double* y, std::size_t n) {
    FHS_DISPATCH(dot, x, y, n);
}

double wdot(const double* w, const double* x, const double* y, std::size_t n) {
    FHS_DISPATCH(wdot, w, x, y, n);
}

void cmul_real(const double* m, const std::complex<double>* z,
               std::complex<double>* out, std::size_t n) {
    FHS_DISPATCH(cmul_real, m, z, out, n);
}

void cmul(const std::complex<double>* m, const std::complex<double>* z,
          std::complex<double>* out, std::size_t n) {
    FHS_DISPATCH(cmul, m, z, out, n);
}

void fft_butterfly(std::complex<double>* data, const std::complex<double>* tw,
                   std::size_t half) {
    FHS_DISPATCH(fft_butterfly, data, tw, half);
}

#undef FHS_DISPATCH

}  // namespace kernels

}  // namespace fhs::simd
