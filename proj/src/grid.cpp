#include "fhs/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fhs/errors.hpp"
#include "fhs/fft.hpp"
#include "fhs/simd.hpp"

namespace fhs {

void GridSpec::validate() const {
    if (!(half_width_T > 0.0) || !std::isfinite(half_width_T))
        throw InvalidInputError("grid: half-width T must be positive and finite");
    if (num_points_N < 2 || !is_pow2(num_points_N))
        throw InvalidInputError("grid: N must be a power of two >= 2");
    if (dim_n < 1) throw InvalidInputError("grid: dimension n must be >= 1");
}

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InvalidInputError("fractional order must lie in (0, 1), got " +
                                std::to_string(alpha));
}

GridSignal::GridSignal(const GridSpec& spec) : spec_(spec) {
    spec_.validate();
    values_.assign(spec_.num_points_N * spec_.dim_n, 0.0);
}

double GridSignal::node_abs(std::size_t k) const {
    double s = 0.0;
    for (std::size_t c = 0; c < spec_.dim_n; ++c) {
        const double v = at(k, c);
        s += v * v;
    }
    return std::sqrt(s);
}

void GridSignal::require_same_grid(const GridSignal& other, const char* op) const {
    if (!same_grid(other))
        throw GridMismatchError(std::string(op) + ": signals live on different grids");
}

void GridSignal::require_finite(const char* op) const {
    if (!is_finite())
        throw InvalidInputError(std::string(op) + ": signal contains NaN/Inf");
}

bool GridSignal::is_finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

double GridSignal::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

GridSignal& GridSignal::operator+=(const GridSignal& other) {
    require_same_grid(other, "operator+=");
    simd::kernels::axpy(1.0, other.values_.data(), values_.data(), values_.size());
    return *this;
}

GridSignal& GridSignal::operator-=(const GridSignal& other) {
    require_same_grid(other, "operator-=");
    simd::kernels::axpy(-1.0, other.values_.data(), values_.data(), values_.size());
    return *this;
}

GridSignal& GridSignal::operator*=(double a) {
    simd::kernels::scal(a, values_.data(), values_.size());
    return *this;
}

void GridSignal::add_scaled(double a, const GridSignal& other) {
    require_same_grid(other, "add_scaled");
    simd::kernels::axpy(a, other.values_.data(), values_.data(), values_.size());
}

double frequency_at(const GridSpec& spec, std::size_t j) {
    const std::size_t n = spec.num_points_N;
    const auto sj = (j < n / 2) ? static_cast<double>(j)
                                : static_cast<double>(j) - static_cast<double>(n);
    return std::numbers::pi * sj / spec.half_width_T;
}

std::vector<std::complex<double>> component_spectrum(const GridSignal& u, std::size_t c) {
    const auto comp = u.component(c);
    std::vector<std::complex<double>> z(comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k) z[k] = comp[k];
    fft_forward(z);
    return z;
}

}  // namespace fhs
