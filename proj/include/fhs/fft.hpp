#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace fhs {

// In-place radix-2 complex FFT for power-of-two sizes. Plans hold the
// bit-reversal table and per-stage twiddle tables; they are immutable after
// construction, and the process-wide plan cache is mutex-protected, so
// transforms are safe to run concurrently.
//
// Conventions: forward X_j = sum_k x_k exp(-2*pi*i*j*k/N) (no scaling),
// inverse includes the 1/N factor, so inverse(forward(x)) == x.
class Fft {
public:
    // Cached plan for size n (n must be a power of two, n >= 1).
    static std::shared_ptr<const Fft> plan(std::size_t n);

    void forward(std::complex<double>* data) const { transform(data, fwd_stages_); }
    void inverse(std::complex<double>* data) const;

    std::size_t size() const { return n_; }

private:
    explicit Fft(std::size_t n);
    void transform(std::complex<double>* data,
                   const std::vector<std::vector<std::complex<double>>>& stages) const;

    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    std::vector<std::vector<std::complex<double>>> fwd_stages_;
    std::vector<std::vector<std::complex<double>>> inv_stages_;
};

void fft_forward(std::vector<std::complex<double>>& v);
void fft_inverse(std::vector<std::complex<double>>& v);

bool is_pow2(std::size_t n);

}  // namespace fhs
