#ifndef NRK_DILOG_HPP
#define NRK_DILOG_HPP

#include <utility>

#include "nrk/real.hpp"

namespace nrk {

struct PrecisionContext {
    int digits = 50;  // requested decimal digits, >= 16
    int guard = 10;   // internal guard digits, >= 10

    /* throws domain_error when the invariants above fail */
    void validate() const;
    bits_t bits() const { return digits_to_bits(digits + guard) + 16; }
};

/* Principal branch of the dilogarithm. The cut is [1, oo); a real argument
 * x > 1 returns the limit from below, Im Li2(x - i0) = -pi log x. */
Complex li2(const Complex& z, const PrecisionContext& ctx);

/* D(z) = log|z| arg(1 - z) + Im Li2(z). Returns exactly 0 for real z
 * (including 0 and 1) without any floating evaluation. */
Real bloch_wigner(const Complex& z, const PrecisionContext& ctx);

/* Partial derivatives (dD/dx, dD/dy) at z = x + iy from the closed-form
 * one-form dD = log|z| d arg(1 - z) - log|1 - z| d arg(z). z not in {0, 1}. */
std::pair<Real, Real> bloch_wigner_gradient(const Complex& z, const PrecisionContext& ctx);

namespace detail {

/* sum_{k>=1} z^k / k^2 with the tail bounded a priori by
 * |z|^{N+1} / ((N+1)^2 (1 - |z|)) < 10^-(digits+guard); needs |z| < 1 */
Complex li2_series(const Complex& z, const PrecisionContext& ctx);

/* sum_{n>=0} B_n u^{n+1} / (n+1)! with u = -log(1 - z); needs |u| < 2 pi.
 * Tail bounded by 4|u| r^{N+1} / (1 - r), r = |u| / (2 pi). */
Complex li2_bernoulli(const Complex& z, const PrecisionContext& ctx);

}  // namespace detail

}  // namespace nrk

#endif
