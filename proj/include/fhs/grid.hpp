#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fhs {

// Grid metadata: the domain [-T, T] sampled at N points, t_k = -T + k*dt,
// dt = 2T/N (the right endpoint is identified with the left, periodically).
struct GridSpec {
    double half_width_T = 0.0;
    std::size_t num_points_N = 0;
    std::size_t dim_n = 0;

    double dt() const { return 2.0 * half_width_T / static_cast<double>(num_points_N); }
    double time_at(std::size_t k) const {
        return -half_width_T + static_cast<double>(k) * dt();
    }
    bool operator==(const GridSpec&) const = default;

    void validate() const;  // throws InvalidInputError on bad metadata
};

// Fractional order in (0, 1). The variational problem additionally requires
// alpha > 1/2; that is enforced where the embedding is used, not here.
class FracOrder {
public:
    explicit FracOrder(double alpha);
    double value() const { return alpha_; }

private:
    double alpha_;
};

// A sampled trajectory u : [-T, T] -> R^n. Storage is coordinate-major:
// component c occupies one contiguous length-N block, which is what the FFT
// and the reduction kernels want.
class GridSignal {
public:
    GridSignal() = default;
    explicit GridSignal(const GridSpec& spec);  // zero-initialized

    const GridSpec& spec() const { return spec_; }
    double half_width() const { return spec_.half_width_T; }
    std::size_t points() const { return spec_.num_points_N; }
    std::size_t dim() const { return spec_.dim_n; }
    double dt() const { return spec_.dt(); }
    double time_at(std::size_t k) const { return spec_.time_at(k); }

    double& at(std::size_t k, std::size_t c) { return values_[c * spec_.num_points_N + k]; }
    double at(std::size_t k, std::size_t c) const {
        return values_[c * spec_.num_points_N + k];
    }

    std::span<double> component(std::size_t c) {
        return {values_.data() + c * spec_.num_points_N, spec_.num_points_N};
    }
    std::span<const double> component(std::size_t c) const {
        return {values_.data() + c * spec_.num_points_N, spec_.num_points_N};
    }

    std::span<double> raw() { return values_; }
    std::span<const double> raw() const { return values_; }

    // Euclidean norm of u(t_k) in R^n.
    double node_abs(std::size_t k) const;

    bool same_grid(const GridSignal& other) const { return spec_ == other.spec_; }

    // Throws GridMismatchError unless (T, N, n) match exactly.
    void require_same_grid(const GridSignal& other, const char* op) const;
    // Throws InvalidInputError if any value is NaN/Inf.
    void require_finite(const char* op) const;

    bool is_finite() const;
    double max_abs() const;

    // In-place linear algebra (dispatched kernels).
    GridSignal& operator+=(const GridSignal& other);
    GridSignal& operator-=(const GridSignal& other);
    GridSignal& operator*=(double a);
    void add_scaled(double a, const GridSignal& other);  // *this += a*other

    friend GridSignal operator+(GridSignal a, const GridSignal& b) { return a += b; }
    friend GridSignal operator-(GridSignal a, const GridSignal& b) { return a -= b; }
    friend GridSignal operator*(double a, GridSignal u) { return u *= a; }

private:
    GridSpec spec_;
    std::vector<double> values_;
};

// Spectrum of one component: bin j holds frequency w_j = pi*j_signed/T with
// j_signed = j for j < N/2 and j - N for j >= N/2.
double frequency_at(const GridSpec& spec, std::size_t j);

// Forward DFT of component c (unscaled, see fft.hpp conventions).
std::vector<std::complex<double>> component_spectrum(const GridSignal& u, std::size_t c);

}  // namespace fhs
