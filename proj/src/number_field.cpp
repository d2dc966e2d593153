#include "nrk/number_field.hpp"

#include <cstdint>
#include <string>

#include "nrk/errors.hpp"

namespace nrk {

struct NumberField::Data {
    std::vector<mpz_class> poly;
    QPoly modulus;
    QMatrix basis;
    QMatrix basis_inv;
    bool maximal = true;
    bool certified = false;
};

namespace {

using zp_poly = std::vector<int64_t>;

void zp_trim(zp_poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int64_t zp_inv(int64_t a, int64_t p)
{
    int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1)
            r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

zp_poly zp_mod(zp_poly a, const zp_poly& b, int64_t p)
{
    zp_trim(a);
    const int64_t inv = zp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        int64_t t = a.back() * inv % p;
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = ((a[shift + j] - t * b[j]) % p + p) % p;
        zp_trim(a);
    }
    return a;
}

zp_poly zp_mulmod(const zp_poly& a, const zp_poly& b, const zp_poly& m, int64_t p)
{
    if (a.empty() || b.empty())
        return {};
    zp_poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return zp_mod(std::move(r), m, p);
}

zp_poly zp_gcd(zp_poly a, zp_poly b, int64_t p)
{
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        zp_poly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/* Irreducibility of a monic f modulo p via gcd(x^{p^i} - x, f) = 1 for
 * i <= n/2, after checking f is squarefree mod p. */
bool irreducible_mod(const std::vector<mpz_class>& f, int64_t p)
{
    const size_t n = f.size() - 1;
    zp_poly fp(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), static_cast<unsigned long>(p));
        fp[i] = r.get_si();
    }
    if (n == 1)
        return true;
    zp_poly df(n);
    for (size_t i = 1; i <= n; ++i)
        df[i - 1] = fp[i] * static_cast<int64_t>(i % p) % p;
    zp_trim(df);
    if (df.empty() || zp_gcd(fp, df, p).size() > 1)
        return false;

    zp_poly xpow = {0, 1};
    for (size_t i = 1; i <= n / 2; ++i) {
        /* xpow <- xpow^p mod f */
        zp_poly base = xpow, acc = {1};
        int64_t e = p;
        while (e) {
            if (e & 1)
                acc = zp_mulmod(acc, base, fp, p);
            base = zp_mulmod(base, base, fp, p);
            e >>= 1;
        }
        xpow = acc;
        zp_poly diff = xpow;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] - 1 + p) % p;
        zp_trim(diff);
        if (diff.empty() || zp_gcd(fp, diff, p).size() > 1)
            return false;
    }
    return true;
}

bool has_integer_root(const std::vector<mpz_class>& f)
{
    if (f[0] == 0)
        return true;
    QPoly q = QPoly::from_integers(f);
    mpz_class c = abs(f[0]);
    /* trial divisors only; a screen, not a proof */
    const unsigned long limit = 1000000;
    for (unsigned long d = 1; d <= limit && mpz_class(d) <= c; ++d) {
        if (mpz_divisible_ui_p(c.get_mpz_t(), d) == 0)
            continue;
        if (q(mpq_class(d)) == 0 || q(mpq_class(-static_cast<long>(d))) == 0)
            return true;
    }
    if (c > limit && (q(mpq_class(c)) == 0 || q(mpq_class(-c)) == 0))
        return true;
    return false;
}

}  // namespace

NumberField NumberField::create(std::vector<mpz_class> poly, std::optional<QMatrix> integral_basis,
                                bool maximal)
{
    while (!poly.empty() && poly.back() == 0)
        poly.pop_back();
    if (poly.size() < 2)
        throw format_error("defining polynomial must have degree >= 1");
    if (poly.back() != 1)
        throw format_error("defining polynomial must be monic (leading coefficient " +
                           poly.back().get_str() + ")");
    const size_t n = poly.size() - 1;
    if (n > 1 && has_integer_root(poly))
        throw format_error("defining polynomial has a rational root");

    auto d = std::make_shared<Data>();
    d->poly = poly;
    d->modulus = QPoly::from_integers(poly);
    d->maximal = maximal;
    for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                      83, 89, 97}) {
        if (irreducible_mod(poly, p)) {
            d->certified = true;
            break;
        }
    }

    QMatrix basis = integral_basis ? *integral_basis : QMatrix::identity(n);
    if (basis.rows() != n || basis.cols() != n)
        throw format_error("integral basis must be " + std::to_string(n) + "x" + std::to_string(n));
    if (determinant(basis) == 0)
        throw format_error("integral basis is singular");
    basis = rational_hermite_form(basis);
    QMatrix inv = inverse(basis);
    /* Z[x] must lie in the lattice: each power-basis vector has integral coordinates */
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (inv(i, j).get_den() != 1)
                throw format_error("integral basis does not contain Z[x]");
    d->basis = std::move(basis);
    d->basis_inv = std::move(inv);
    NumberField k(std::move(d));
    /* the lattice must be a ring, which makes every basis element integral */
    std::vector<FieldElement> w;
    for (size_t i = 0; i < n; ++i) {
        std::vector<mpq_class> e(n, 0);
        e[i] = 1;
        w.push_back(k.from_integral_coords(e));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (const auto& c : (w[i] * w[j]).integral_coords())
                if (c.get_den() != 1)
                    throw format_error("integral basis is not closed under multiplication");
    return k;
}

int NumberField::degree() const { return static_cast<int>(d_->poly.size()) - 1; }
const std::vector<mpz_class>& NumberField::defining_poly() const { return d_->poly; }
const QPoly& NumberField::modulus() const { return d_->modulus; }
const QMatrix& NumberField::integral_basis() const { return d_->basis; }
const QMatrix& NumberField::integral_basis_inverse() const { return d_->basis_inv; }
bool NumberField::maximality_asserted() const { return d_->maximal; }
bool NumberField::irreducibility_certified() const { return d_->certified; }

FieldElement NumberField::zero() const { return FieldElement(*this, {}); }
FieldElement NumberField::one() const { return rational(1); }

FieldElement NumberField::generator() const
{
    std::vector<mpq_class> c(2);
    c[1] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement NumberField::rational(const mpq_class& q) const { return FieldElement(*this, {q}); }

FieldElement NumberField::element(std::vector<mpq_class> coeffs) const
{
    return FieldElement(*this, std::move(coeffs));
}

FieldElement NumberField::from_integral_coords(const std::vector<mpq_class>& coords) const
{
    const size_t n = degree();
    std::vector<mpq_class> c(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            c[j] += coords[i] * d_->basis(i, j);
    return FieldElement(*this, std::move(c));
}

bool operator==(const NumberField& a, const NumberField& b)
{
    if (a.d_ == b.d_)
        return true;
    return a.d_->poly == b.d_->poly && a.d_->basis == b.d_->basis;
}

FieldElement::FieldElement(NumberField field, std::vector<mpq_class> coeffs) : field_(std::move(field))
{
    const int n = field_.degree();
    QPoly p(std::move(coeffs));
    if (p.degree() >= n)
        p = divmod(p, field_.modulus()).remainder;
    c_.assign(n, 0);
    for (int i = 0; i <= p.degree(); ++i)
        c_[i] = p.coeff(i);
}

bool FieldElement::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

bool FieldElement::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b)
{
    if (a.field() != b.field())
        throw domain_error("elements belong to different number fields");
}

}  // namespace

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw arithmetic_error("division by zero in number field");
    QPolyXgcd r = xgcd(as_poly(), field_.modulus());
    if (r.g.degree() != 0)
        throw arithmetic_error("element is a zero divisor: defining polynomial is reducible");
    return FieldElement(field_, r.s.coeffs());
}

FieldElement FieldElement::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    FieldElement result = field_.one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

std::vector<mpq_class> FieldElement::integral_coords() const
{
    const size_t n = c_.size();
    const QMatrix& inv = field_.integral_basis_inverse();
    std::vector<mpq_class> r(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            r[j] += c_[i] * inv(i, j);
    return r;
}

bool FieldElement::is_integral() const
{
    for (const auto& x : integral_coords())
        if (x.get_den() != 1)
            return false;
    return true;
}

FieldElement FieldElement::operator-() const
{
    std::vector<mpq_class> r = c_;
    for (auto& x : r)
        x = -x;
    return FieldElement(field_, std::move(r));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a, b);
    std::vector<mpq_class> r = a.c_;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += b.c_[i];
    return FieldElement(a.field_, std::move(r));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a, b);
    std::vector<mpq_class> r = a.c_;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= b.c_[i];
    return FieldElement(a.field_, std::move(r));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a, b);
    QPoly p = a.as_poly() * b.as_poly();
    return FieldElement(a.field_, p.coeffs());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    require_same_field(a, b);
    return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    return a.field_ == b.field_ && a.c_ == b.c_;
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::div:
        return a / b;
    }
    throw domain_error("unknown arithmetic operation");
}

mpq_class norm(const FieldElement& a)
{
    if (a.is_zero())
        return 0;
    return resultant(a.field().modulus(), a.as_poly());
}

bool is_unit(const FieldElement& a)
{
    if (a.is_zero() || !a.is_integral())
        return false;
    return abs(norm(a)) == 1;
}

bool is_in_Rcirc(const FieldElement& a)
{
    return is_unit(a) && is_unit(a.field().one() - a);
}

}  // namespace nrk
