#include "nrk/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrk {

QPoly::QPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }

QPoly QPoly::from_integers(const std::vector<mpz_class>& c)
{
    std::vector<mpq_class> q(c.begin(), c.end());
    return QPoly(std::move(q));
}

QPoly QPoly::monomial(const mpq_class& c, int deg)
{
    std::vector<mpq_class> v(deg + 1);
    v[deg] = c;
    return QPoly(std::move(v));
}

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mpq_class QPoly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return c_[i];
}

mpq_class QPoly::operator()(const mpq_class& x) const
{
    mpq_class r = 0;
    for (size_t k = c_.size(); k-- > 0;)
        r = r * x + c_[k];
    return r;
}

QPoly QPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<mpq_class> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = c_[k] * static_cast<long>(k);
    return QPoly(std::move(d));
}

QPoly operator+(const QPoly& a, const QPoly& b)
{
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < a.c_.size(); ++k)
        r[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k)
        r[k] += b.c_[k];
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b)
{
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < a.c_.size(); ++k)
        r[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k)
        r[k] -= b.c_[k];
    return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const mpq_class& s)
{
    std::vector<mpq_class> r = a.c_;
    for (auto& x : r)
        x *= s;
    return QPoly(std::move(r));
}

QPolyDivision divmod(const QPoly& a, const QPoly& b)
{
    if (b.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    std::vector<mpq_class> rem = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0)
        return {QPoly(), a};
    std::vector<mpq_class> q(dq + 1);
    const auto& bc = b.coeffs();
    for (int k = dq; k >= 0; --k) {
        mpq_class t = rem[k + db] / b.lead();
        q[k] = t;
        if (t == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[k + j] -= t * bc[j];
    }
    rem.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b)
{
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero())
        return x;
    return x * (mpq_class(1) / x.lead());
}

QPolyXgcd xgcd(const QPoly& a, const QPoly& b)
{
    QPoly r0 = a, r1 = b;
    QPoly s0({mpq_class(1)}), s1;
    QPoly t0, t1({mpq_class(1)});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        QPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    mpq_class inv = mpq_class(1) / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

mpq_class resultant(const QPoly& a0, const QPoly& b0)
{
    if (a0.is_zero() || b0.is_zero())
        return 0;
    QPoly a = a0, b = b0;
    mpq_class acc = 1;
    for (;;) {
        int da = a.degree(), db = b.degree();
        if (db == 0) {
            mpq_class p;
            mpz_pow_ui(p.get_num_mpz_t(), b.lead().get_num_mpz_t(), da);
            mpz_pow_ui(p.get_den_mpz_t(), b.lead().get_den_mpz_t(), da);
            p.canonicalize();
            return acc * p;
        }
        QPoly r = divmod(a, b).remainder;
        if (r.is_zero())
            return 0;
        /* Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r) */
        int dr = r.degree();
        if ((da * db) % 2)
            acc = -acc;
        for (int k = 0; k < da - dr; ++k)
            acc *= b.lead();
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace nrk
