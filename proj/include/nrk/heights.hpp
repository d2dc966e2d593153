#ifndef NRK_HEIGHTS_HPP
#define NRK_HEIGHTS_HPP

#include <memory>
#include <string>
#include <vector>

#include "nrk/arakelov.hpp"

namespace nrk {

/* A class x with x^N = 1 + a(f), f a Gal-invariant real tuple over the
 * embeddings. */
struct DiffK0Class {
    unsigned long order_hint = 1;
    std::vector<Real> scaling_vector;
    std::shared_ptr<const EmbeddingSet> embeddings;
    std::string provenance;

    /* domain_error unless f is Gal-invariant and N > 0 */
    void validate() const;
};

/* s(f) / N */
Real height(const DiffK0Class& x);

/* -1/(2n) sum log f(sigma); f positive and Gal-invariant */
Real height_scaled_trivial(const std::vector<Real>& f, const EmbeddingSet& e);

/* sigma -> -(rank/2) log f(sigma) */
std::vector<Real> scaling_alpha(unsigned rank, const std::vector<Real>& f, const EmbeddingSet& e);

/* The class c(L)^N trivialized by `generator`, which must generate L^N
 * (principality_error otherwise): f(sigma) = -1/2 log h^N_sigma(generator). */
DiffK0Class c_hat(const MetrizedLineBundle& l, unsigned n, const FieldElement& generator);
Real c_hat_height(const MetrizedLineBundle& l, unsigned n, const FieldElement& generator);

}  // namespace nrk

#endif
