#ifndef NRK_RELATIONS_HPP
#define NRK_RELATIONS_HPP

#include <memory>
#include <vector>

#include "nrk/embeddings.hpp"
#include "nrk/intmat.hpp"
#include "nrk/number_field.hpp"

namespace nrk {

/* The subgroup G of R^x generated by a list of units, presented as
 * Z^k / L with L the lattice of exponent vectors e such that
 * prod g_i^{e_i} = 1. */
struct MultiplicativePresentation {
    std::vector<FieldElement> generators;
    IntMatrix relations;      // HNF rows spanning L, every row verified exactly
    mpz_class torsion_order;  // order w of the roots of unity in G
    std::shared_ptr<const EmbeddingSet> embeddings;

    size_t size() const { return generators.size(); }
};

/* prod gens_i^{exps_i}, exactly */
FieldElement evaluate_word(const std::vector<FieldElement>& gens, const IntVector& exps);

/* Finds L from the integer kernel of the scaled logarithmic embedding
 * (log|sigma(g)| for one sigma per conjugation orbit, plus arg(sigma_0(g))/2pi
 * taken modulo 1) by LLL, with scale 10^(digits - guard). Candidates are
 * accepted only after exact multiplication in K; a rejected candidate
 * raises precision_error, a non-unit raises domain_error. */
MultiplicativePresentation relation_lattice(const std::vector<FieldElement>& elems,
                                            std::shared_ptr<const EmbeddingSet> emb);
MultiplicativePresentation relation_lattice(const std::vector<FieldElement>& elems, int digits);

inline constexpr int default_exponent_bound = 64;

/* Exponent vector e (reduced modulo L) with prod g_i^{e_i} = x. Throws
 * presentation_incomplete_error when x is not in G or needs exponents above
 * the bound. */
IntVector coordinates_of(const FieldElement& x, const MultiplicativePresentation& p,
                         int exponent_bound = default_exponent_bound);

/* An element of Lambda^2(G) in canonical reduced coordinates. */
struct WedgeClass {
    IntVector coords;
    bool is_zero() const;
    friend bool operator==(const WedgeClass& a, const WedgeClass& b) { return a.coords == b.coords; }
};

/* Lambda^2(Z^k / L) over Z, torsion kept: Lambda^2(Z^k) on e_i ^ e_j (i < j)
 * modulo the span of r ^ e_j for relation rows r, put in Smith normal form.
 * Coordinates are those of the SNF basis with invariant != 1: torsion
 * coordinates are reduced into [0, d), free coordinates are unrestricted. */
class ExteriorSquare {
  public:
    ExteriorSquare(size_t generators, const IntMatrix& relations);
    explicit ExteriorSquare(const MultiplicativePresentation& p);

    size_t generator_count() const { return k_; }
    size_t dimension() const { return moduli_.size(); }
    /* invariant of each coordinate: d > 1 torsion, 0 free */
    const std::vector<mpz_class>& moduli() const { return moduli_; }
    std::vector<mpz_class> torsion_invariants() const;
    size_t free_rank() const;

    /* class of a vector written on the basis e_i ^ e_j, i < j, lexicographic */
    WedgeClass reduce(const IntVector& w) const;
    WedgeClass wedge(const IntVector& a, const IntVector& b) const;
    WedgeClass add(const WedgeClass& a, const WedgeClass& b) const;
    WedgeClass scale(const WedgeClass& a, const mpz_class& n) const;
    WedgeClass zero() const;
    /* same class with torsion coordinates dropped */
    IntVector free_part(const WedgeClass& a) const;

  private:
    WedgeClass normalize(IntVector y) const;

    size_t k_;
    IntMatrix right_;                // V of the Smith form
    std::vector<size_t> active_;     // SNF positions with invariant != 1
    std::vector<mpz_class> moduli_;  // invariants at the active positions
};

/* lambda ^ (1 - lambda) in Lambda^2(G). lambda must be in R-circ. */
WedgeClass steinberg_image(const FieldElement& lambda, const MultiplicativePresentation& p,
                           const ExteriorSquare& sq);

/* sum n_i [lambda_i] in Z[R-circ] */
struct BlochElement {
    std::vector<FieldElement> support;
    std::vector<mpz_class> multiplicities;
};

struct BlochKernel {
    std::vector<BlochElement> basis;  // kernel of Z^m -> Lambda^2(G), torsion kept
    IntMatrix lattice;                // the same kernel as HNF rows
    IntMatrix modulo_torsion;         // kernel after discarding torsion, HNF rows
    /* v maps to torsion in Lambda^2(G) without vanishing there */
    bool vanishes_only_modulo_torsion(const IntVector& v) const;
    bool contains(const IntVector& v) const;
};

BlochKernel bloch_kernel(const std::vector<FieldElement>& candidates, const MultiplicativePresentation& p);

/* sum n_i lambda_i ^ (1 - lambda_i); zero exactly when x is in the kernel */
WedgeClass steinberg_sum(const BlochElement& x, const MultiplicativePresentation& p,
                         const ExteriorSquare& sq);

}  // namespace nrk

#endif
