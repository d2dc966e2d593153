#ifndef NRK_ARAKELOV_HPP
#define NRK_ARAKELOV_HPP

#include <memory>
#include <optional>
#include <vector>

#include "nrk/embeddings.hpp"
#include "nrk/number_field.hpp"

namespace nrk {

/* A fractional ideal L of R as a Z-lattice: rows of `basis` are integral-basis
 * coordinates of a Z-basis of L, in rational Hermite normal form. */
class FractionalIdeal {
  public:
    /* Z-span of the given rows (integral-basis coordinates, at least n rows).
     * Throws domain_error when the span has rank < n or is not an R-module. */
    static FractionalIdeal from_rows(const NumberField& field, const QMatrix& rows);
    /* the R-module generated by the given elements */
    static FractionalIdeal generated_by(const std::vector<FieldElement>& gens);
    static FractionalIdeal principal(const FieldElement& a);
    static FractionalIdeal unit(const NumberField& field);

    const NumberField& field() const { return field_; }
    const QMatrix& basis() const { return basis_; }
    FieldElement basis_element(size_t i) const;
    /* first HNF basis vector; the reference section for metrics */
    FieldElement reference_section() const { return basis_element(0); }

    /* coordinates of a in the basis, rational; integral iff a is in L */
    std::vector<mpq_class> coordinates(const FieldElement& a) const;
    bool contains(const FieldElement& a) const;

    friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b);
    friend bool operator!=(const FractionalIdeal& a, const FractionalIdeal& b) { return !(a == b); }

  private:
    FractionalIdeal(NumberField f, QMatrix b) : field_(std::move(f)), basis_(std::move(b)) {}
    NumberField field_;
    QMatrix basis_;
};

mpq_class ideal_norm(const FractionalIdeal& l);
FractionalIdeal operator*(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal scaled(const FractionalIdeal& l, const FieldElement& a);
FractionalIdeal power(const FractionalIdeal& l, unsigned n);

/* #(L / R s) = |N(s)| / N(L). Throws domain_error for s = 0 and
 * membership_error when s is not in L. */
mpq_class index_quotient(const FractionalIdeal& l, const FieldElement& s);

/* Hermitian metric, stored as the squared norm h_sigma(s0) of the reference
 * section at each embedding. Conjugate embeddings carry identical values. */
struct Metric {
    std::vector<Real> values;
};

struct MetrizedLineBundle {
    FractionalIdeal ideal;
    Metric metric;
    std::shared_ptr<const EmbeddingSet> embeddings;

    /* checks sizes, positivity and exact Gal-invariance; domain_error */
    void validate() const;
    /* h_sigma(s) = values[sigma] * |sigma(s / s0)|^2 */
    std::vector<Real> squared_norms(const FieldElement& s) const;
};

MetrizedLineBundle make_bundle(FractionalIdeal ideal, Metric metric, std::shared_ptr<const EmbeddingSet> e);
/* h_sigma(s) = |sigma(s)|^2 */
MetrizedLineBundle standard_bundle(FractionalIdeal ideal, std::shared_ptr<const EmbeddingSet> e);
/* metric given by its values h_sigma(s) on a chosen nonzero s in L */
MetrizedLineBundle bundle_from_section(FractionalIdeal ideal, const FieldElement& s, const std::vector<Real>& h,
                                       std::shared_ptr<const EmbeddingSet> e);

/* (1/n) (log #(L / R s) - 1/2 sum log h_sigma(s)); s defaults to s0 */
Real arithmetic_degree(const MetrizedLineBundle& l, const std::optional<FieldElement>& s = std::nullopt);

MetrizedLineBundle tensor(const MetrizedLineBundle& a, const MetrizedLineBundle& b);
/* multiplies h_sigma by exp(-2 lambda_sigma); lambda must be Gal-invariant */
MetrizedLineBundle twist_metric(const MetrizedLineBundle& l, const std::vector<Real>& lambda);
/* (aL, h') with h'(a s) = h(s) */
MetrizedLineBundle transport(const MetrizedLineBundle& l, const FieldElement& a);
/* L^n with the induced metric */
MetrizedLineBundle tensor_power(const MetrizedLineBundle& l, unsigned n);

}  // namespace nrk

#endif
