#ifndef NRK_REAL_HPP
#define NRK_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace nrk {

using bits_t = mpfr_prec_t;

/* Number of mantissa bits needed to carry `digits` significant decimal
 * digits, plus a few spare bits. */
bits_t digits_to_bits(int digits);

/* Owning RAII handle on an mpfr_t. Every value carries its own precision;
 * a binary operation produces a result at the larger of the two operand
 * precisions. All rounding is to nearest, which is symmetric under
 * negation: this is what makes conjugate embeddings evaluate to exact
 * conjugates. */
class Real {
  public:
    explicit Real(bits_t bits = 64);
    Real(long x, bits_t bits);
    Real(const mpz_class& x, bits_t bits);
    Real(const mpq_class& x, bits_t bits);
    static Real from_string(const std::string& s, bits_t bits);
    static Real from_double(double x, bits_t bits);
    static Real pi(bits_t bits);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    bits_t precision() const { return mpfr_get_prec(v_); }
    /* rounds this value to `bits` of precision in place */
    void set_precision(bits_t bits);

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /* base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for 0 */
    long exponent2() const;
    /* approximate log10|x|, -1e9 for zero */
    double log10_abs() const;

    /* `digits` significant decimal digits, %g-style, deterministic */
    std::string to_string(int digits) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator*=(long o);
    Real& operator/=(long o);

    Real operator-() const;

  private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator-(long a, const Real& b);

bool operator==(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator>(const Real& a, const Real& b) { return b < a; }
inline bool operator<=(const Real& a, const Real& b) { return !(b < a); }
inline bool operator>=(const Real& a, const Real& b) { return !(a < b); }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real max(const Real& a, const Real& b);
/* nearest integer */
mpz_class round_to_integer(const Real& x);
/* 10^e at the given precision */
Real pow10(long e, bits_t bits);

/* Complex number as a pair of Reals. */
struct Complex {
    Real re;
    Real im;

    explicit Complex(bits_t bits = 64) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r);

    bits_t precision() const;
    bool is_real() const { return im.is_zero(); }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex operator-() const { return Complex(-re, -im); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Real& a, const Complex& b);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm2(const Complex& z);   // |z|^2
Real arg(const Complex& z);     // principal, in (-pi, pi]
Complex log(const Complex& z);  // principal branch
Complex pow(const Complex& z, long n);
/* parses "a", "a+bi", "a-bi", "bi", "i" with decimal or rational parts */
Complex parse_complex(const std::string& s, bits_t bits);

}  // namespace nrk

#endif
