#ifndef NRK_NUMBER_FIELD_HPP
#define NRK_NUMBER_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "nrk/intmat.hpp"
#include "nrk/polynomial.hpp"

namespace nrk {

class FieldElement;

/* K = Q[x]/(f) for a monic integer f, together with a Z-basis of the ring
 * of integers R given in power-basis coordinates (rows). The handle is
 * cheap to copy; the underlying data is immutable and shared. */
class NumberField {
  public:
    /* Validates f (monic, integer, degree >= 1, no rational root when the
     * degree exceeds 1) and the integral basis (invertible, containing
     * Z[x]); stores the basis in Hermite normal form. Throws format_error. */
    static NumberField create(std::vector<mpz_class> poly,
                              std::optional<QMatrix> integral_basis = std::nullopt,
                              bool maximal = true);

    int degree() const;
    const std::vector<mpz_class>& defining_poly() const;
    const QPoly& modulus() const;
    /* rows are the integral basis elements in power-basis coordinates */
    const QMatrix& integral_basis() const;
    const QMatrix& integral_basis_inverse() const;
    bool maximality_asserted() const;
    /* f was found irreducible modulo some prime below 100 */
    bool irreducibility_certified() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;
    FieldElement rational(const mpq_class& q) const;
    FieldElement element(std::vector<mpq_class> coeffs) const;
    /* element with the given coordinates in the integral basis */
    FieldElement from_integral_coords(const std::vector<mpq_class>& coords) const;

    friend bool operator==(const NumberField& a, const NumberField& b);
    friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

  private:
    struct Data;
    explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
    friend class FieldElement;
};

/* Element of K stored by its reduced power-basis coordinates (length n). */
class FieldElement {
  public:
    FieldElement(NumberField field, std::vector<mpq_class> coeffs);

    const NumberField& field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    QPoly as_poly() const { return QPoly(c_); }
    bool is_zero() const;
    bool is_rational() const;

    FieldElement inverse() const;
    /* negative exponents go through the inverse */
    FieldElement pow(long e) const;

    std::vector<mpq_class> integral_coords() const;
    bool is_integral() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    NumberField field_;
    std::vector<mpq_class> c_;
};

enum class ArithOp { add, sub, mul, div };
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/* N_{K/Q}(a) = Res(f, a) for monic f. */
mpq_class norm(const FieldElement& a);
bool is_unit(const FieldElement& a);
/* both a and 1 - a are units */
bool is_in_Rcirc(const FieldElement& a);

}  // namespace nrk

#endif
