#include "nrk/real.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "nrk/errors.hpp"

namespace nrk {

bits_t digits_to_bits(int digits)
{
    return static_cast<bits_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

Real::Real(bits_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long x, bits_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
}

Real::Real(const mpz_class& x, bits_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& x, bits_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
}

Real Real::from_string(const std::string& s, bits_t bits)
{
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0 || q.get_den() == 0)
            throw format_error("invalid rational literal '" + s + "'");
        q.canonicalize();
        return Real(q, bits);
    }
    if (s.empty())
        throw format_error("empty real literal");
    Real r(bits);
    char* end = nullptr;
    mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (end == s.c_str() || *end != '\0')
        throw format_error("invalid real literal '" + s + "'");
    return r;
}

Real Real::from_double(double x, bits_t bits)
{
    Real r(bits);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::pi(bits_t bits)
{
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real::Real(const Real& o)
{
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

void Real::set_precision(bits_t bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

long Real::exponent2() const
{
    if (mpfr_zero_p(v_))
        return std::numeric_limits<long>::min() / 2;
    return mpfr_get_exp(v_);
}

double Real::log10_abs() const
{
    if (mpfr_zero_p(v_))
        return -1e9;
    long e;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + e * 0.30102999566398120;
}

std::string Real::to_string(int digits) const
{
    if (mpfr_zero_p(v_))
        return "0";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real& Real::operator+=(const Real& o)
{
    if (o.precision() > precision())
        set_precision(o.precision());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o)
{
    if (o.precision() > precision())
        set_precision(o.precision());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o)
{
    if (o.precision() > precision())
        set_precision(o.precision());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o)
{
    if (o.precision() > precision())
        set_precision(o.precision());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(long o)
{
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(long o)
{
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const
{
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {

template <typename F>
Real binary(const Real& a, const Real& b, F f)
{
    Real r(std::max(a.precision(), b.precision()));
    f(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

template <typename F>
Real unary(const Real& a, F f)
{
    Real r(a.precision());
    f(r.get(), a.get(), MPFR_RNDN);
    return r;
}

}  // namespace

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real operator*(const Real& a, long b)
{
    Real r(a.precision());
    mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(const Real& a, long b)
{
    Real r(a.precision());
    mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, long b)
{
    Real r(a.precision());
    mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, long b)
{
    Real r(a.precision());
    mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

Real operator-(long a, const Real& b)
{
    Real r(b.precision());
    mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
    return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }
Real hypot(const Real& x, const Real& y) { return binary(x, y, mpfr_hypot); }

Real pow(const Real& x, long n)
{
    Real r(x.precision());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

mpz_class round_to_integer(const Real& x)
{
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDN);
    return z;
}

Real pow10(long e, bits_t bits)
{
    Real r(bits);
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) {
        Real one(1L, bits);
        return one / r;
    }
    return r;
}

Complex::Complex(Real r) : re(std::move(r)), im(re.precision()) {}

bits_t Complex::precision() const { return std::max(re.precision(), im.precision()); }

Complex& Complex::operator+=(const Complex& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o)
{
    *this = *this * o;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }

Complex operator*(const Complex& a, const Complex& b)
{
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Complex operator/(const Complex& a, const Complex& b)
{
    Real d = b.re * b.re + b.im * b.im;
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }
Complex operator+(const Complex& a, const Real& b) { return Complex(a.re + b, a.im); }
Complex operator-(const Real& a, const Complex& b) { return Complex(a - b.re, -b.im); }

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return atan2(z.im, z.re); }
Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

Complex pow(const Complex& z, long n)
{
    bits_t bits = z.precision();
    if (n < 0) {
        Complex one(Real(1L, bits));
        return pow(one / z, -n);
    }
    Complex result(Real(1L, bits));
    Complex base = z;
    while (n > 0) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

Complex parse_complex(const std::string& raw, bits_t bits)
{
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw format_error("empty complex literal");

    Complex z(bits);
    bool has_i = s.back() == 'i' || s.back() == 'I' || s.back() == 'j';
    if (!has_i) {
        z.re = Real::from_string(s, bits);
        return z;
    }
    std::string body = s.substr(0, s.size() - 1);
    /* split at the last sign that is not an exponent sign or the leading sign */
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
    std::string im_part = split == std::string::npos ? body : body.substr(split);
    if (im_part.empty() || im_part == "+")
        im_part = "1";
    else if (im_part == "-")
        im_part = "-1";
    if (im_part[0] == '+')
        im_part = im_part.substr(1);
    if (!re_part.empty())
        z.re = Real::from_string(re_part, bits);
    z.im = Real::from_string(im_part, bits);
    return z;
}

}  // namespace nrk
