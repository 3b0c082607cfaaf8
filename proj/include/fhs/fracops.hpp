#pragma once

#include <cstddef>

#include "fhs/grid.hpp"

namespace fhs::fracops {

// Liouville-Weyl operators on the truncated periodic grid, realized as
// Fourier multipliers over the discrete frequencies w_j = pi*j/T,
// j in [-N/2, N/2). The principal branch is used throughout:
//   (+iw)^a = |w|^a * exp(+i*sgn(w)*a*pi/2)   (left derivative)
//   (-iw)^a = |w|^a * exp(-i*sgn(w)*a*pi/2)   (right derivative)
// and the integrals carry the reciprocal symbols. The zero mode is
// annihilated (singular for integrals, vanishing symbol for derivatives),
// and so is the Nyquist bin, which has no conjugate partner and would
// otherwise leave complex round-off in real signals.

// Relative tolerance for the mean gate on fractional integrals.
inline constexpr double kMeanTolRel = 1e-8;
// Relative boundary-decay tolerance for the Marchaud oracle.
inline constexpr double kDecayTolRel = 1e-6;
// Marchaud defaults: xi_max = 2T and this node count.
inline constexpr std::size_t kMarchaudNodes = 400;

GridSignal left_frac_derivative(const GridSignal& u, const FracOrder& a);
GridSignal right_frac_derivative(const GridSignal& u, const FracOrder& a);

// Throw SingularModeError if |mean(u_c)| > kMeanTolRel * max|u| for any
// coordinate c.
GridSignal left_frac_integral(const GridSignal& u, const FracOrder& a);
GridSignal right_frac_integral(const GridSignal& u, const FracOrder& a);

// tD_inf^a(-inf_D_t^a u): the two principal-branch symbols collapse to the
// real nonnegative |w|^(2a). alpha may be 1 here (classical -u'' limit, used
// by tests); elsewhere orders live in (0,1).
GridSignal composed_operator(const GridSignal& u, double alpha);

// Time-domain oracle for left_frac_derivative via the difference form
//   a/Gamma(1-a) * integral_0^inf (u(x) - u(x-xi)) / xi^(a+1) dxi.
// Graded geometric quadrature on (0, xi_max] with the smallest node ~dt/4;
// the (0, dt/4] head is integrated analytically from finite-difference
// derivatives of u. Off-grid samples of u(x - xi) wrap periodically -- the
// same function model the discrete transform uses. When xi_max covers at
// least one full period 2T, the remaining (xi_max, inf) range is summed over
// periodic images; for smaller xi_max the integral is truncated as asked.
GridSignal marchaud_left_oracle(const GridSignal& u, const FracOrder& a,
                                double xi_max, std::size_t m_quad);

}  // namespace fhs::fracops
