#include "nrk/intmat.hpp"

#include <algorithm>
#include <numeric>

#include "nrk/errors.hpp"

namespace nrk {

IntVector mul(const IntVector& v, const IntMatrix& m)
{
    IntVector r(m.cols(), 0);
    for (size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0)
            continue;
        for (size_t j = 0; j < m.cols(); ++j)
            r[j] += v[i] * m(i, j);
    }
    return r;
}

QMatrix to_rational(const IntMatrix& m)
{
    QMatrix q(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            q(i, j) = m(i, j);
    return q;
}

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

mpz_class round_q(const mpq_class& x)
{
    mpq_class h = x + mpq_class(1, 2);
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    return r;
}

}  // namespace

HermiteForm hermite_form(const IntMatrix& a)
{
    const size_t m = a.rows(), n = a.cols();
    IntMatrix h = a;
    IntMatrix t = IntMatrix::identity(m);
    size_t r = 0;
    for (size_t j = 0; j < n && r < m; ++j) {
        for (;;) {
            size_t best = m;
            for (size_t i = r; i < m; ++i)
                if (h(i, j) != 0 && (best == m || abs(h(i, j)) < abs(h(best, j))))
                    best = i;
            if (best == m)
                break;
            h.swap_rows(r, best);
            t.swap_rows(r, best);
            bool clean = true;
            for (size_t i = r + 1; i < m; ++i) {
                if (h(i, j) == 0)
                    continue;
                mpz_class q = floor_div(h(i, j), h(r, j));
                h.add_row(i, r, -q);
                t.add_row(i, r, -q);
                if (h(i, j) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (r >= m || h(r, j) == 0)
            continue;
        if (h(r, j) < 0) {
            h.negate_row(r);
            t.negate_row(r);
        }
        for (size_t i = 0; i < r; ++i) {
            mpz_class q = floor_div(h(i, j), h(r, j));
            if (q != 0) {
                h.add_row(i, r, -q);
                t.add_row(i, r, -q);
            }
        }
        ++r;
    }
    HermiteForm out;
    out.rank = r;
    out.basis = IntMatrix(r, n);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j)
            out.basis(i, j) = h(i, j);
    out.transform = std::move(t);
    return out;
}

SmithForm smith_form(const IntMatrix& a)
{
    const size_t m = a.rows(), n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);
    const size_t steps = std::min(m, n);
    for (size_t t = 0; t < steps; ++t) {
        bool exhausted = false;
        for (;;) {
            size_t bi = m, bj = n;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j)
                    if (d(i, j) != 0 && (bi == m || abs(d(i, j)) < abs(d(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m) {
                exhausted = true;
                break;
            }
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);

            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                mpz_class q = floor_div(d(i, t), d(t, t));
                d.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                mpz_class q = floor_div(d(t, j), d(t, t));
                d.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            /* pivot must divide the remaining block */
            size_t bad = m;
            for (size_t i = t + 1; i < m && bad == m; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            d.add_row(t, bad, 1);
            u.add_row(t, bad, 1);
        }
        if (exhausted)
            break;
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm out;
    out.diagonal.assign(n, 0);
    for (size_t t = 0; t < steps; ++t)
        out.diagonal[t] = d(t, t);
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

IntVector reduce_by_hnf(const IntMatrix& hnf, IntVector v)
{
    for (size_t i = 0; i < hnf.rows(); ++i) {
        size_t p = 0;
        while (p < hnf.cols() && hnf(i, p) == 0)
            ++p;
        if (p == hnf.cols())
            continue;
        mpz_class q = floor_div(v[p], hnf(i, p));
        if (q == 0)
            continue;
        for (size_t j = 0; j < hnf.cols(); ++j)
            v[j] -= q * hnf(i, j);
    }
    return v;
}

bool in_row_lattice(const IntMatrix& hnf, const IntVector& v)
{
    for (const auto& x : reduce_by_hnf(hnf, v))
        if (x != 0)
            return false;
    return true;
}

IntMatrix left_kernel(const IntMatrix& a)
{
    HermiteForm hf = hermite_form(a);
    IntMatrix k(0, a.rows());
    for (size_t i = hf.rank; i < a.rows(); ++i)
        k.append_row(hf.transform.row(i));
    if (k.rows() == 0)
        return k;
    return hermite_form(k).basis;
}

namespace {

struct GramSchmidt {
    std::vector<std::vector<mpq_class>> star;
    std::vector<std::vector<mpq_class>> mu;
    std::vector<mpq_class> norm;
};

mpq_class dot(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b)
{
    mpq_class s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

GramSchmidt gram_schmidt(const IntMatrix& b)
{
    const size_t n = b.rows(), dim = b.cols();
    GramSchmidt gs;
    gs.star.assign(n, std::vector<mpq_class>(dim));
    gs.mu.assign(n, std::vector<mpq_class>(n));
    gs.norm.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        std::vector<mpq_class> bi(dim);
        for (size_t j = 0; j < dim; ++j)
            bi[j] = b(i, j);
        gs.star[i] = bi;
        for (size_t k = 0; k < i; ++k) {
            if (gs.norm[k] == 0)
                throw arithmetic_error("lll: basis rows are linearly dependent");
            gs.mu[i][k] = dot(bi, gs.star[k]) / gs.norm[k];
            for (size_t j = 0; j < dim; ++j)
                gs.star[i][j] -= gs.mu[i][k] * gs.star[k][j];
        }
        gs.norm[i] = dot(gs.star[i], gs.star[i]);
    }
    return gs;
}

}  // namespace

IntMatrix lll_reduce(const IntMatrix& basis, const mpq_class& delta)
{
    IntMatrix b = basis;
    const size_t n = b.rows();
    if (n <= 1)
        return b;
    GramSchmidt gs = gram_schmidt(b);
    size_t k = 1;
    while (k < n) {
        for (size_t j = k; j-- > 0;) {
            mpz_class q = round_q(gs.mu[k][j]);
            if (q == 0)
                continue;
            b.add_row(k, j, -q);
            for (size_t l = 0; l < j; ++l)
                gs.mu[k][l] -= q * gs.mu[j][l];
            gs.mu[k][j] -= q;
        }
        mpq_class m = gs.mu[k][k - 1];
        if (gs.norm[k] >= (delta - m * m) * gs.norm[k - 1]) {
            ++k;
        } else {
            b.swap_rows(k, k - 1);
            gs = gram_schmidt(b);
            k = std::max<size_t>(k - 1, 1);
        }
    }
    return b;
}

mpq_class determinant(QMatrix m)
{
    const size_t n = m.rows();
    mpq_class det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0)
                continue;
            mpq_class f = m(r, c) / m(c, c);
            m.add_row(r, c, -f);
        }
    }
    return det;
}

QMatrix inverse(const QMatrix& a)
{
    const size_t n = a.rows();
    QMatrix m = a;
    QMatrix inv = QMatrix::identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c) == 0)
            ++p;
        if (p == n)
            throw arithmetic_error("matrix is singular");
        m.swap_rows(p, c);
        inv.swap_rows(p, c);
        mpq_class s = mpq_class(1) / m(c, c);
        for (size_t j = 0; j < n; ++j) {
            m(c, j) *= s;
            inv(c, j) *= s;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0)
                continue;
            mpq_class f = m(r, c);
            m.add_row(r, c, -f);
            inv.add_row(r, c, -f);
        }
    }
    return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    QMatrix q = inverse(to_rational(m));
    IntMatrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (q(i, j).get_den() != 1)
                throw arithmetic_error("matrix is not unimodular");
            r(i, j) = q(i, j).get_num();
        }
    return r;
}

QMatrix rational_hermite_form(const QMatrix& m)
{
    mpz_class den = 1;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    IntMatrix z(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            mpq_class x = m(i, j) * den;
            z(i, j) = x.get_num();
        }
    IntMatrix h = hermite_form(z).basis;
    QMatrix out(h.rows(), h.cols());
    for (size_t i = 0; i < h.rows(); ++i)
        for (size_t j = 0; j < h.cols(); ++j) {
            out(i, j) = mpq_class(h(i, j), den);
            out(i, j).canonicalize();
        }
    return out;
}

}  // namespace nrk
