#ifndef NRK_KMODEL_HPP
#define NRK_KMODEL_HPP

#include <memory>
#include <string>
#include <vector>

#include "nrk/dilog.hpp"
#include "nrk/embeddings.hpp"
#include "nrk/errors.hpp"
#include "nrk/relations.hpp"

namespace nrk {

/* x(sigma)_{1-2p}: a real embedding for odd p, or a conjugate pair
 * (indexed by its Im > 0 member) for every p. As a function on the n
 * embeddings it is supported on sigma alone or on both members of the pair. */
struct KGenerator {
    size_t embedding;
    bool pair;
    std::string label;
};

inline constexpr int default_max_p = 6;

/* Real homotopy of K(R) as the square-zero algebra R + M'(R). Degrees are
 * d = 1 - 2p; the degree-0 part is a single real. */
class GradedKAlgebra {
  public:
    GradedKAlgebra(std::shared_ptr<const EmbeddingSet> e, int max_p = default_max_p);

    const std::shared_ptr<const EmbeddingSet>& embeddings() const { return emb_; }
    std::pair<int, int> signature() const { return emb_->signature(); }
    int max_p() const { return max_p_; }

    /* generator list in degree d; empty for even negative d; computed on
     * demand above max_p. domain_error for d > 0. */
    std::vector<KGenerator> generators(int d) const;
    /* dimension of M'(R) in degree d (1 for d = 0) */
    size_t dimension(int d) const;
    /* rank of K_{-d}(R) (x) R, i.e. dim M(R) in degree d; d = 0 or d = 1 - 2p */
    size_t rank_in_degree(int d) const;
    /* number of embeddings a degree -1 generator is supported on (1 or 2) */
    long multiplicity(size_t generator_index) const;

  private:
    std::shared_ptr<const EmbeddingSet> emb_;
    int max_p_;
    std::vector<std::vector<KGenerator>> table_;  // index p - 1
};

template <typename S>
struct GradedElement {
    int degree = 0;
    std::vector<S> coords;

    friend bool operator==(const GradedElement& a, const GradedElement& b)
    {
        return a.degree == b.degree && a.coords == b.coords;
    }
};

namespace detail {

inline mpq_class scalar_zero(const mpq_class&) { return 0; }
inline Real scalar_zero(const Real& like) { return Real(like.precision()); }

template <typename S>
void require_shape(const GradedElement<S>& b, const GradedKAlgebra& m)
{
    if (b.coords.size() != m.dimension(b.degree))
        throw domain_error("coordinate count does not match the degree");
}

}  // namespace detail

template <typename S>
GradedElement<S> graded_zero(const GradedKAlgebra& m, int d, const S& like)
{
    return GradedElement<S>{d, std::vector<S>(m.dimension(d), detail::scalar_zero(like))};
}

/* p(b) = sum over all n embeddings of the value of b there */
template <typename S>
S p_map(const GradedElement<S>& b, const GradedKAlgebra& m)
{
    if (b.degree != -1)
        throw domain_error("p is defined in degree -1 only");
    detail::require_shape(b, m);
    if (b.coords.empty())
        throw domain_error("degree -1 is empty for this field");
    S acc = detail::scalar_zero(b.coords.front());
    for (size_t i = 0; i < b.coords.size(); ++i)
        acc += b.coords[i] * m.multiplicity(i);
    return acc;
}

/* b - p(b)/n sum_sigma x(sigma)_{-1} */
template <typename S>
GradedElement<S> project_M(const GradedElement<S>& b, const GradedKAlgebra& m)
{
    S shift = p_map(b, m) / static_cast<long>(m.embeddings()->size());
    GradedElement<S> r = b;
    for (auto& c : r.coords)
        c -= shift;
    return r;
}

/* square-zero product: scalars act, two positive-codegree factors give 0 */
template <typename S>
GradedElement<S> multiply(const GradedElement<S>& a, const GradedElement<S>& b, const GradedKAlgebra& m)
{
    detail::require_shape(a, m);
    detail::require_shape(b, m);
    if (a.degree == 0 || b.degree == 0) {
        const GradedElement<S>& scalar = a.degree == 0 ? a : b;
        const GradedElement<S>& other = a.degree == 0 ? b : a;
        GradedElement<S> r = other;
        for (auto& c : r.coords)
            c = scalar.coords[0] * c;
        return r;
    }
    return GradedElement<S>{a.degree + b.degree, {}};
}

template <typename S>
GradedElement<S> operator+(const GradedElement<S>& a, const GradedElement<S>& b)
{
    if (a.degree != b.degree)
        throw domain_error("cannot add elements of different degree");
    GradedElement<S> r = a;
    for (size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] += b.coords[i];
    return r;
}

/* unit regulator written on the degree -1 generators */
GradedElement<Real> embed_unit(const FieldElement& lambda, const GradedKAlgebra& m);
/* K3 regulator written on the degree -3 generators */
GradedElement<Real> embed_k3(const BlochElement& x, const GradedKAlgebra& m, const PrecisionContext& ctx,
                             const MultiplicativePresentation* presentation = nullptr);

}  // namespace nrk

#endif
