#include "nrk/dilog.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "nrk/errors.hpp"

namespace nrk {

void PrecisionContext::validate() const
{
    if (digits < 16)
        throw domain_error("precision must be at least 16 digits");
    if (guard < 10)
        throw domain_error("guard digits must be at least 10");
}

namespace {

constexpr double ln10 = 2.302585092994046;

/* B_n / n! for n < count, as Reals. The exact table is grown on demand
 * under a lock and never shrinks. */
std::vector<Real> bernoulli_over_factorial(size_t count, bits_t bits)
{
    static std::mutex lock;
    static std::vector<mpq_class> table{mpq_class(1)};
    std::vector<Real> out;
    std::lock_guard<std::mutex> guard(lock);
    /* c_m = -sum_{j<m} c_j / (m+1-j)!  from x/(e^x - 1) = sum c_m x^m */
    while (table.size() < count) {
        const size_t m = table.size();
        mpq_class s = 0;
        mpz_class fact = 1;
        for (size_t j = m; j-- > 0;) {
            fact *= static_cast<unsigned long>(m + 1 - j);
            if (table[j] != 0)
                s += table[j] / mpq_class(fact);
        }
        table.push_back(-s);
    }
    out.reserve(count);
    for (size_t k = 0; k < count; ++k)
        out.emplace_back(table[k], bits);
    return out;
}

Complex core(const Complex& z, const PrecisionContext& ctx)
{
    const bits_t bits = ctx.bits();
    const Real one(1L, bits);
    const Real pi = Real::pi(bits);
    const Real zeta2 = pi * pi / 6;
    const Real absz = abs(z);

    if (absz > one) {
        /* Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2 / 2 */
        Complex w = Complex(one) / z;
        Complex l = log(-z);
        Complex r = -core(w, ctx) - l * l / Real(2L, bits);
        r.re -= zeta2;
        return r;
    }
    if (z.re * 2 > one) {
        /* Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z) */
        Complex w = one - z;
        Complex r = -(log(z) * log(w)) - core(w, ctx);
        r.re += zeta2;
        return r;
    }
    if (absz * 2 <= one)
        return detail::li2_series(z, ctx);
    return detail::li2_bernoulli(z, ctx);
}

}  // namespace

namespace detail {

Complex li2_series(const Complex& z, const PrecisionContext& ctx)
{
    const bits_t bits = ctx.bits();
    Complex sum(bits);
    const double r = abs(z).to_double();
    if (r == 0)
        return sum;
    if (!(r < 1))
        throw domain_error("li2 series requires |z| < 1");
    const double target = (ctx.digits + ctx.guard) * ln10;
    const long terms = static_cast<long>(std::ceil((target - std::log(1 - r)) / -std::log(r))) + 1;
    Complex power = z;
    for (long k = 1; k <= terms; ++k) {
        sum += power / Real(k * k, bits);
        power = power * z;
    }
    return sum;
}

Complex li2_bernoulli(const Complex& z, const PrecisionContext& ctx)
{
    const bits_t bits = ctx.bits();
    const Real one(1L, bits);
    Complex u = -log(one - z);
    const double au = abs(u).to_double();
    Complex sum(bits);
    if (au == 0)
        return sum;
    const double two_pi = 6.283185307179586;
    const double ratio = au / two_pi;
    if (!(ratio < 1))
        throw domain_error("li2 Bernoulli series requires |log(1-z)| < 2 pi");
    const double target = (ctx.digits + ctx.guard) * ln10;
    const long terms =
        static_cast<long>(std::ceil((target + std::log(4 * au / (1 - ratio))) / -std::log(ratio))) + 2;
    std::vector<Real> c = bernoulli_over_factorial(static_cast<size_t>(terms) + 1, bits);
    Complex power = u;  // u^{n+1}
    for (long n = 0; n <= terms; ++n) {
        if (!c[n].is_zero())
            sum += power * (c[n] / (n + 1));
        power = power * u;
    }
    return sum;
}

}  // namespace detail

Complex li2(const Complex& z, const PrecisionContext& ctx)
{
    ctx.validate();
    const bits_t bits = ctx.bits();
    const Real one(1L, bits);
    Complex zz(Real(z.re), Real(z.im));
    zz.re.set_precision(std::max(bits, z.re.precision()));
    zz.im.set_precision(std::max(bits, z.im.precision()));

    if (zz.im.is_zero()) {
        const Real& x = zz.re;
        Complex out(bits);
        if (x.is_zero())
            return out;
        const Real pi = Real::pi(bits);
        if (x == one) {
            out.re = pi * pi / 6;
            return out;
        }
        if (x > one) {
            /* Li2(x - i0) = pi^2/3 - log(x)^2/2 - Li2(1/x) - i pi log x */
            Real lx = log(x);
            Complex inv = core(Complex(one / x), ctx);
            out.re = pi * pi / 3 - lx * lx / 2 - inv.re;
            out.im = -(pi * lx);
            return out;
        }
        out.re = core(zz, ctx).re;
        return out;
    }
    return core(zz, ctx);
}

Real bloch_wigner(const Complex& z, const PrecisionContext& ctx)
{
    ctx.validate();
    const bits_t bits = ctx.bits();
    if (z.im.is_zero())
        return Real(bits);
    const Real one(1L, bits);
    Complex w = one - z;
    return log(abs(z)) * arg(w) + li2(z, ctx).im;
}

std::pair<Real, Real> bloch_wigner_gradient(const Complex& z, const PrecisionContext& ctx)
{
    ctx.validate();
    const bits_t bits = ctx.bits();
    const Real one(1L, bits);
    const Real& x = z.re;
    const Real& y = z.im;
    Complex w = one - z;
    Real nz = norm2(z), nw = norm2(w);
    Real lz = log(abs(z)), lw = log(abs(w));
    /* d arg z = (x dy - y dx)/|z|^2,  d arg(1-z) = (-(1-x) dy - y dx)/|1-z|^2 */
    Real dx = lz * (-y / nw) - lw * (-y / nz);
    Real dy = lz * (-(one - x) / nw) - lw * (x / nz);
    return {dx, dy};
}

}  // namespace nrk
