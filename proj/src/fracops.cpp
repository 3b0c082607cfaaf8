#include "fhs/fracops.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fhs/errors.hpp"
#include "fhs/fft.hpp"
#include "fhs/simd.hpp"

namespace fhs::fracops {

namespace {

using cd = std::complex<double>;

// Principal-branch symbol (s*iw)^p at all N bins, s = +1 (left) / -1 (right),
// p = +a (derivative) / -a (integral). Zero mode and Nyquist are annihilated.
std::vector<cd> branch_multiplier(const GridSpec& spec, double p, double side) {
    const std::size_t n = spec.num_points_N;
    std::vector<cd> m(n, cd{0.0, 0.0});
    const double phase = side * p * std::numbers::pi / 2.0;
    const cd pos{std::cos(phase), std::sin(phase)};
    const cd neg = std::conj(pos);
    for (std::size_t j = 1; j < n; ++j) {
        if (j == n / 2) continue;
        const double w = frequency_at(spec, j);
        m[j] = std::pow(std::abs(w), p) * (w > 0 ? pos : neg);
    }
    return m;
}

GridSignal apply_complex_multiplier(const GridSignal& u, const std::vector<cd>& m) {
    GridSignal out(u.spec());
    const auto plan = Fft::plan(u.points());
    std::vector<cd> z(u.points());
    for (std::size_t c = 0; c < u.dim(); ++c) {
        const auto comp = u.component(c);
        for (std::size_t k = 0; k < comp.size(); ++k) z[k] = comp[k];
        plan->forward(z.data());
        simd::kernels::cmul(m.data(), z.data(), z.data(), z.size());
        plan->inverse(z.data());
        auto dst = out.component(c);
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = z[k].real();
    }
    return out;
}

GridSignal apply_real_multiplier(const GridSignal& u, const std::vector<double>& m) {
    GridSignal out(u.spec());
    const auto plan = Fft::plan(u.points());
    std::vector<cd> z(u.points());
    for (std::size_t c = 0; c < u.dim(); ++c) {
        const auto comp = u.component(c);
        for (std::size_t k = 0; k < comp.size(); ++k) z[k] = comp[k];
        plan->forward(z.data());
        simd::kernels::cmul_real(m.data(), z.data(), z.data(), z.size());
        plan->inverse(z.data());
        auto dst = out.component(c);
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = z[k].real();
    }
    return out;
}

void require_small_mean(const GridSignal& u, const char* op) {
    const double tol = kMeanTolRel * u.max_abs();
    for (std::size_t c = 0; c < u.dim(); ++c) {
        const auto comp = u.component(c);
        double s = 0.0;
        for (double v : comp) s += v;
        const double mean = s / static_cast<double>(comp.size());
        if (std::abs(mean) > tol)
            throw SingularModeError(std::string(op) +
                                    ": zero-frequency component exceeds mean tolerance");
    }
}

}  // namespace

GridSignal left_frac_derivative(const GridSignal& u, const FracOrder& a) {
    u.require_finite("left_frac_derivative");
    return apply_complex_multiplier(u, branch_multiplier(u.spec(), a.value(), +1.0));
}

GridSignal right_frac_derivative(const GridSignal& u, const FracOrder& a) {
    u.require_finite("right_frac_derivative");
    return apply_complex_multiplier(u, branch_multiplier(u.spec(), a.value(), -1.0));
}

GridSignal left_frac_integral(const GridSignal& u, const FracOrder& a) {
    u.require_finite("left_frac_integral");
    require_small_mean(u, "left_frac_integral");
    return apply_complex_multiplier(u, branch_multiplier(u.spec(), -a.value(), +1.0));
}

GridSignal right_frac_integral(const GridSignal& u, const FracOrder& a) {
    u.require_finite("right_frac_integral");
    require_small_mean(u, "right_frac_integral");
    return apply_complex_multiplier(u, branch_multiplier(u.spec(), -a.value(), -1.0));
}

GridSignal composed_operator(const GridSignal& u, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw InvalidInputError("composed_operator: order must lie in (0, 1]");
    u.require_finite("composed_operator");
    const std::size_t n = u.points();
    std::vector<double> m(n, 0.0);
    for (std::size_t j = 1; j < n; ++j) {
        if (j == n / 2) continue;
        m[j] = std::pow(std::abs(frequency_at(u.spec(), j)), 2.0 * alpha);
    }
    return apply_real_multiplier(u, m);
}

namespace {

// Cubic Lagrange interpolation of one component at fractional index `pos`,
// periodic wrap.
double interp_periodic(std::span<const double> comp, double pos) {
    const auto n = static_cast<std::ptrdiff_t>(comp.size());
    const double fl = std::floor(pos);
    const double th = pos - fl;
    auto base = static_cast<std::ptrdiff_t>(fl);
    auto wrap = [n](std::ptrdiff_t i) {
        i %= n;
        return static_cast<std::size_t>(i < 0 ? i + n : i);
    };
    const double um1 = comp[wrap(base - 1)];
    const double u0 = comp[wrap(base)];
    const double u1 = comp[wrap(base + 1)];
    const double u2 = comp[wrap(base + 2)];
    const double wm1 = -th * (th - 1.0) * (th - 2.0) / 6.0;
    const double w0 = (th + 1.0) * (th - 1.0) * (th - 2.0) / 2.0;
    const double w1 = -(th + 1.0) * th * (th - 2.0) / 2.0;
    const double w2 = (th + 1.0) * th * (th - 1.0) / 6.0;
    return wm1 * um1 + w0 * u0 + w1 * u1 + w2 * u2;
}

}  // namespace

GridSignal marchaud_left_oracle(const GridSignal& u, const FracOrder& a,
                                double xi_max, std::size_t m_quad) {
    u.require_finite("marchaud_left_oracle");
    const double alpha = a.value();
    const std::size_t n = u.points();
    const double dt = u.dt();
    const double period = 2.0 * u.half_width();

    if (!(xi_max > dt) || m_quad < 2)
        throw InvalidInputError("marchaud_left_oracle: need xi_max > dt and m_quad >= 2");

    const double decay_tol = kDecayTolRel * u.max_abs();
    if (u.node_abs(0) > decay_tol || u.node_abs(n - 1) > decay_tol)
        throw DomainTruncationError(
            "marchaud_left_oracle: signal does not decay at the grid boundary");

    const double c_a = alpha / std::tgamma(1.0 - alpha);
    const double xi_min = dt / 4.0;
    const bool full_period = xi_max >= period;
    const double xi_cap = full_period ? period : xi_max;

    // Graded geometric mesh on [xi_min, xi_cap] with trapezoid weights.
    std::vector<double> node(m_quad), weight(m_quad);
    const double ratio = std::pow(xi_min / xi_cap,
                                  1.0 / static_cast<double>(m_quad - 1));
    for (std::size_t q = 0; q < m_quad; ++q)
        node[q] = xi_cap * std::pow(ratio, static_cast<double>(m_quad - 1 - q));
    for (std::size_t q = 0; q < m_quad; ++q) {
        const double lo = (q == 0) ? node[0] : node[q - 1];
        const double hi = (q + 1 == m_quad) ? node[m_quad - 1] : node[q + 1];
        weight[q] = 0.5 * (hi - lo);
    }

    // Periodic-image factor G(xi') = sum_{m>=1} (xi' + period*m)^(-1-alpha),
    // sampled at xi' = j*dt, truncated with a midpoint remainder.
    std::vector<double> image_factor;
    if (full_period) {
        constexpr int kImages = 64;
        image_factor.resize(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            const double xi = static_cast<double>(j) * dt;
            double g = 0.0;
            for (int m = 1; m <= kImages; ++m)
                g += std::pow(xi + period * m, -1.0 - alpha);
            g += std::pow(xi + period * (kImages + 0.5), -alpha) / (period * alpha);
            image_factor[j] = g;
        }
    }

    GridSignal out(u.spec());
    for (std::size_t c = 0; c < u.dim(); ++c) {
        const auto comp = u.component(c);
        auto dst = out.component(c);
        for (std::size_t k = 0; k < n; ++k) {
            const double uk = comp[k];

            // Analytic head over (0, xi_min] from the Taylor expansion
            // u(x) - u(x-xi) = u'(x) xi - u''(x) xi^2/2 + O(xi^3),
            // derivatives by 4th-order central differences (periodic).
            auto cyc = [&](std::ptrdiff_t i) {
                const auto nn = static_cast<std::ptrdiff_t>(n);
                i %= nn;
                return comp[static_cast<std::size_t>(i < 0 ? i + nn : i)];
            };
            const auto ki = static_cast<std::ptrdiff_t>(k);
            const double d1 = (-cyc(ki + 2) + 8.0 * cyc(ki + 1) - 8.0 * cyc(ki - 1) +
                               cyc(ki - 2)) / (12.0 * dt);
            const double d2 = (-cyc(ki + 2) + 16.0 * cyc(ki + 1) - 30.0 * uk +
                               16.0 * cyc(ki - 1) - cyc(ki - 2)) / (12.0 * dt * dt);
            double acc = d1 * std::pow(xi_min, 1.0 - alpha) / (1.0 - alpha) -
                         0.5 * d2 * std::pow(xi_min, 2.0 - alpha) / (2.0 - alpha);

            for (std::size_t q = 0; q < m_quad; ++q) {
                const double pos = static_cast<double>(k) - node[q] / dt;
                const double diff = uk - interp_periodic(comp, pos);
                acc += weight[q] * diff * std::pow(node[q], -1.0 - alpha);
            }

            if (full_period) {
                // Trapezoid in xi' over one period against the image factor.
                double tail = 0.5 * (uk - comp[k]) * image_factor[0];  // j = 0 term is 0
                for (std::size_t j = 1; j < n; ++j) {
                    const std::size_t idx = (k + n - (j % n)) % n;
                    tail += (uk - comp[idx]) * image_factor[j];
                }
                tail += 0.5 * (uk - comp[k]) * image_factor[n];
                acc += tail * dt;
            }

            dst[k] = c_a * acc;
        }
    }
    return out;
}

}  // namespace fhs::fracops
