#ifndef NRK_POLYNOMIAL_HPP
#define NRK_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <vector>

namespace nrk {

/* Dense univariate polynomial over Q, coefficients in ascending degree.
 * The zero polynomial has no coefficients; otherwise the top coefficient
 * is nonzero. */
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> c);
    static QPoly from_integers(const std::vector<mpz_class>& c);
    static QPoly monomial(const mpq_class& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpq_class& lead() const { return c_.back(); }
    mpq_class coeff(int i) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    mpq_class operator()(const mpq_class& x) const;
    QPoly derivative() const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const mpq_class& s);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  private:
    void trim();
    std::vector<mpq_class> c_;
};

struct QPolyDivision {
    QPoly quotient;
    QPoly remainder;
};

/* b must be nonzero */
QPolyDivision divmod(const QPoly& a, const QPoly& b);
/* monic gcd; gcd(0, 0) = 0 */
QPoly gcd(const QPoly& a, const QPoly& b);

struct QPolyXgcd {
    QPoly g;  // monic gcd
    QPoly s;  // s*a + t*b = g
    QPoly t;
};
QPolyXgcd xgcd(const QPoly& a, const QPoly& b);

/* Res(a, b) by the Euclidean remainder sequence. */
mpq_class resultant(const QPoly& a, const QPoly& b);

}  // namespace nrk

#endif
