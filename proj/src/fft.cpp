#include "fhs/fft.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "fhs/simd.hpp"

namespace fhs {

bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

Fft::Fft(std::size_t n) : n_(n) {
    if (!is_pow2(n)) throw std::invalid_argument("Fft: size must be a power of two");

    bitrev_.resize(n);
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n) ++log2n;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < log2n; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n - 1 - b);
        bitrev_[i] = r;
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        std::vector<std::complex<double>> fwd(half), inv(half);
        for (std::size_t j = 0; j < half; ++j) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(j)
                               / static_cast<double>(len);
            fwd[j] = {std::cos(ang), std::sin(ang)};
            inv[j] = std::conj(fwd[j]);
        }
        fwd_stages_.push_back(std::move(fwd));
        inv_stages_.push_back(std::move(inv));
    }
}

void Fft::transform(std::complex<double>* data,
                    const std::vector<std::vector<std::complex<double>>>& stages) const {
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t r = bitrev_[i];
        if (i < r) std::swap(data[i], data[r]);
    }

    // Resolve the butterfly backend once per transform.
    auto* butterfly = simd::kernels::scalar::fft_butterfly;
#ifdef FHS_BUILD_AVX2
    if (simd::active_backend() == simd::Backend::avx2)
        butterfly = simd::kernels::avx2::fft_butterfly;
#endif

    std::size_t stage = 0;
    for (std::size_t len = 2; len <= n_; len <<= 1, ++stage) {
        const std::size_t half = len / 2;
        const auto* tw = stages[stage].data();
        for (std::size_t start = 0; start < n_; start += len)
            butterfly(data + start, tw, half);
    }
}

void Fft::inverse(std::complex<double>* data) const {
    transform(data, inv_stages_);
    const double s = 1.0 / static_cast<double>(n_);
    simd::kernels::scal(s, reinterpret_cast<double*>(data), 2 * n_);
}

std::shared_ptr<const Fft> Fft::plan(std::size_t n) {
    static std::mutex mtx;
    static std::unordered_map<std::size_t, std::shared_ptr<const Fft>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto p = std::shared_ptr<const Fft>(new Fft(n));
    cache.emplace(n, p);
    return p;
}

void fft_forward(std::vector<std::complex<double>>& v) {
    Fft::plan(v.size())->forward(v.data());
}

void fft_inverse(std::vector<std::complex<double>>& v) {
    Fft::plan(v.size())->inverse(v.data());
}

}  // namespace fhs
