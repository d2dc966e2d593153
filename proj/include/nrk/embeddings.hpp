#ifndef NRK_EMBEDDINGS_HPP
#define NRK_EMBEDDINGS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nrk/number_field.hpp"
#include "nrk/real.hpp"

namespace nrk {

/* Guard digits carried internally on top of every requested precision. */
inline constexpr int guard_digits = 10;

/* The complex embeddings of K at a fixed decimal precision.
 *
 * Ordering: real roots first in increasing order, then the non-real roots
 * sorted by real part and then imaginary part, so each conjugate pair is
 * adjacent with the Im < 0 member first. The two members of a pair are
 * stored as exact conjugates of each other, and real roots have an
 * imaginary part that is exactly zero. */
class EmbeddingSet {
  public:
    const NumberField& field() const { return field_; }
    int precision() const { return digits_; }
    /* working precision: digits + guard_digits */
    bits_t bits() const { return bits_; }
    size_t size() const { return roots_.size(); }
    const Complex& root(size_t i) const { return roots_[i]; }
    const std::vector<Complex>& roots() const { return roots_; }
    /* index of the complex-conjugate embedding; a fixed point iff real */
    size_t conjugate(size_t i) const { return conj_[i]; }
    const std::vector<size_t>& conjugation_pairing() const { return conj_; }
    bool is_real(size_t i) const { return conj_[i] == i; }
    /* (r1, r2) */
    std::pair<int, int> signature() const { return {r1_, r2_}; }
    /* one index per orbit of conjugation: every real embedding and the
     * Im > 0 member of each pair, in embedding order */
    std::vector<size_t> orbit_representatives() const;

  private:
    friend EmbeddingSet embeddings(const NumberField& field, int digits);
    EmbeddingSet(NumberField f) : field_(std::move(f)) {}

    NumberField field_;
    int digits_ = 0;
    bits_t bits_ = 0;
    std::vector<Complex> roots_;
    std::vector<size_t> conj_;
    int r1_ = 0, r2_ = 0;
};

/* Roots of the defining polynomial by Aberth iteration from a perturbed
 * circle of starting points, then Newton-polished and certified: each root
 * z satisfies |f(z)| <= 10^-digits * sum |c_k||z|^k.
 *
 * Throws domain_error when digits < 16, squarefree_error when f has a
 * repeated factor (checked exactly by gcd(f, f')), precision_error when the
 * iteration does not converge or roots cannot be separated or paired at
 * the working precision. */
EmbeddingSet embeddings(const NumberField& field, int digits);

/* Horner evaluation of the representative of a at root(index), carried out
 * at the working precision. With u = 2^-bits the forward error is bounded
 * by about 2n u sum |a_k||z|^k (n the degree); the input rationals are
 * rounded once. Conjugate embeddings give exactly conjugate values. */
Complex evaluate(const FieldElement& a, const EmbeddingSet& e, size_t index);

}  // namespace nrk

#endif
