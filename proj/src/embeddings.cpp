#include "nrk/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nrk/errors.hpp"

namespace nrk {

namespace {

struct RealPoly {
    std::vector<Real> c;  // ascending

    Complex operator()(const Complex& z) const
    {
        Complex acc(Real(z.precision()), Real(z.precision()));
        acc.re = c.back();
        for (size_t k = c.size() - 1; k-- > 0;)
            acc = acc * z + c[k];
        return acc;
    }

    Real operator()(const Real& x) const
    {
        Real acc = c.back();
        for (size_t k = c.size() - 1; k-- > 0;)
            acc = acc * x + c[k];
        return acc;
    }

    RealPoly derivative() const
    {
        RealPoly d;
        for (size_t k = 1; k < c.size(); ++k)
            d.c.push_back(c[k] * static_cast<long>(k));
        return d;
    }

    /* sum |c_k| |z|^k */
    Real magnitude(const Real& r) const
    {
        Real acc = abs(c.back());
        for (size_t k = c.size() - 1; k-- > 0;)
            acc = acc * r + abs(c[k]);
        return acc;
    }
};

RealPoly to_real_poly(const std::vector<mpz_class>& f, bits_t bits)
{
    RealPoly p;
    for (const auto& x : f)
        p.c.emplace_back(x, bits);
    return p;
}

/* Fujiwara's bound on the root moduli of a monic polynomial */
double root_bound(const std::vector<mpz_class>& f)
{
    const size_t n = f.size() - 1;
    double b = 0;
    for (size_t k = 1; k <= n; ++k) {
        double c = std::fabs(f[n - k].get_d());
        if (k == n)
            c /= 2;
        b = std::max(b, std::pow(c, 1.0 / static_cast<double>(k)));
    }
    return 2 * b;
}

std::vector<Complex> aberth(const RealPoly& p, const std::vector<mpz_class>& f, bits_t bits)
{
    const size_t n = p.c.size() - 1;
    RealPoly dp = p.derivative();

    const double radius = std::max(0.5, root_bound(f) / 2);
    const double two_pi = 6.283185307179586;
    std::vector<Complex> z;
    for (size_t k = 0; k < n; ++k) {
        double t = two_pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z.emplace_back(Real::from_double(radius * std::cos(t), bits),
                       Real::from_double(radius * std::sin(t), bits));
    }

    /* corrections below 2^-(bits-24) relative count as converged */
    const double stop = -(static_cast<double>(bits) - 24) * 0.30102999566398120;
    const int max_iter = 1000 + 20 * static_cast<int>(n);
    for (int it = 0; it < max_iter; ++it) {
        double worst = -1e9;
        for (size_t k = 0; k < n; ++k) {
            Complex v = p(z[k]);
            if (v.re.is_zero() && v.im.is_zero())
                continue;
            Complex ratio = v / dp(z[k]);
            Complex s(bits);
            for (size_t j = 0; j < n; ++j)
                if (j != k)
                    s += Complex(Real(1L, bits)) / (z[k] - z[j]);
            Complex w = ratio / (Complex(Real(1L, bits)) - ratio * s);
            z[k] -= w;
            double rel = abs(w).log10_abs() - std::max(0.0, abs(z[k]).log10_abs());
            worst = std::max(worst, rel);
        }
        if (worst < stop)
            return z;
    }
    throw precision_error("root iteration did not converge; increase precision");
}

Complex newton(const RealPoly& p, const RealPoly& dp, Complex z, int steps)
{
    for (int s = 0; s < steps; ++s) {
        Complex d = dp(z);
        if (d.re.is_zero() && d.im.is_zero())
            break;
        z -= p(z) / d;
    }
    return z;
}

Real newton(const RealPoly& p, const RealPoly& dp, Real x, int steps)
{
    for (int s = 0; s < steps; ++s) {
        Real d = dp(x);
        if (d.is_zero())
            break;
        x -= p(x) / d;
    }
    return x;
}

}  // namespace

std::vector<size_t> EmbeddingSet::orbit_representatives() const
{
    std::vector<size_t> reps;
    for (size_t i = 0; i < roots_.size(); ++i)
        if (conj_[i] == i || roots_[i].im.sign() > 0)
            reps.push_back(i);
    return reps;
}

EmbeddingSet embeddings(const NumberField& field, int digits)
{
    if (digits < 16)
        throw domain_error("embedding precision must be at least 16 digits");
    const QPoly& f = field.modulus();
    if (gcd(f, f.derivative()).degree() > 0)
        throw squarefree_error("defining polynomial is not squarefree");

    EmbeddingSet e(field);
    e.digits_ = digits;
    e.bits_ = digits_to_bits(digits + guard_digits);
    const bits_t work = e.bits_ + 32;
    const size_t n = field.degree();
    const auto& fz = field.defining_poly();
    RealPoly p = to_real_poly(fz, work);
    RealPoly dp = p.derivative();

    std::vector<Complex> z;
    if (n == 1) {
        z.emplace_back(-p.c[0]);
    } else {
        z = aberth(p, fz, work);
    }

    /* classify and pair */
    const Real tol = pow10(-(digits + guard_digits) / 2, work);
    const Real sep_tol = pow10(-(digits + guard_digits) / 3, work);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (abs(z[i] - z[j]) < sep_tol)
                throw precision_error("roots are not separated at the requested precision");

    const Real one(1L, work);
    std::vector<size_t> partner(n, n);
    for (size_t i = 0; i < n; ++i) {
        Real scale = max(one, abs(z[i]));
        if (abs(z[i].im) < tol * scale) {
            partner[i] = i;
            continue;
        }
        size_t best = n;
        Real best_d(work);
        for (size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            Real d = abs(z[j] - conj(z[i]));
            if (best == n || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        if (best == n || !(best_d < tol * scale))
            throw precision_error("could not pair a non-real root with its conjugate");
        partner[i] = best;
    }
    for (size_t i = 0; i < n; ++i)
        if (partner[partner[i]] != i)
            throw precision_error("conjugate pairing is not an involution");

    std::vector<Complex> real_roots, upper_roots;
    for (size_t i = 0; i < n; ++i) {
        if (partner[i] == i) {
            Real x = newton(p, dp, z[i].re, 3);
            x.set_precision(e.bits_);
            real_roots.emplace_back(x);
        } else if (z[i].im.sign() > 0) {
            Complex w = newton(p, dp, z[i], 3);
            w.re.set_precision(e.bits_);
            w.im.set_precision(e.bits_);
            upper_roots.push_back(w);
        }
    }
    if (real_roots.size() + 2 * upper_roots.size() != n)
        throw precision_error("inconsistent conjugate pairing");

    std::sort(real_roots.begin(), real_roots.end(),
              [](const Complex& a, const Complex& b) { return a.re < b.re; });
    std::sort(upper_roots.begin(), upper_roots.end(), [](const Complex& a, const Complex& b) {
        if (a.re != b.re)
            return a.re < b.re;
        return a.im < b.im;
    });

    for (auto& r : real_roots) {
        e.conj_.push_back(e.roots_.size());
        e.roots_.push_back(std::move(r));
    }
    for (auto& u : upper_roots) {
        size_t k = e.roots_.size();
        e.roots_.push_back(conj(u));
        e.roots_.push_back(u);
        e.conj_.push_back(k + 1);
        e.conj_.push_back(k);
    }
    e.r1_ = static_cast<int>(real_roots.size());
    e.r2_ = static_cast<int>(upper_roots.size());

    /* certify residuals */
    RealPoly pf = to_real_poly(fz, e.bits_);
    const Real bound = pow10(-digits, e.bits_);
    for (const auto& r : e.roots_) {
        Real res = abs(pf(r));
        if (res > bound * pf.magnitude(abs(r)))
            throw precision_error("root residual exceeds the certified bound");
    }
    return e;
}

Complex evaluate(const FieldElement& a, const EmbeddingSet& e, size_t index)
{
    const bits_t bits = e.bits();
    const auto& c = a.coeffs();
    const Complex& z = e.root(index);
    Complex acc(bits);
    acc.re = Real(c.back(), bits);
    for (size_t k = c.size() - 1; k-- > 0;) {
        acc = acc * z;
        acc.re += Real(c[k], bits);
    }
    return acc;
}

}  // namespace nrk
