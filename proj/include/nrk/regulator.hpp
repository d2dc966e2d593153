#ifndef NRK_REGULATOR_HPP
#define NRK_REGULATOR_HPP

#include <memory>
#include <optional>
#include <vector>

#include "nrk/dilog.hpp"
#include "nrk/embeddings.hpp"
#include "nrk/relations.hpp"

namespace nrk {

enum class Weight { unit, k3 };

/* One real per embedding, in embedding order. For k3 the value is the
 * coefficient of i, so conjugate embeddings carry opposite values. */
struct RegulatorVector {
    std::shared_ptr<const EmbeddingSet> embeddings;
    std::vector<Real> values;
    Weight weight = Weight::unit;

    size_t size() const { return values.size(); }
};

/* log|sigma(lambda)| per embedding. lambda must be a unit. */
RegulatorVector unit_regulator(const FieldElement& lambda, std::shared_ptr<const EmbeddingSet> e);

/* -sum n_i D(sigma(lambda_i)), exactly 0 at real embeddings. When a
 * presentation is given the Steinberg sum of x is checked to vanish. */
RegulatorVector k3_regulator(const BlochElement& x, std::shared_ptr<const EmbeddingSet> e,
                             const PrecisionContext& ctx,
                             const MultiplicativePresentation* presentation = nullptr);

/* arithmetic mean over all embeddings; unit weight only */
Real s_map(const RegulatorVector& v);

/* componentwise sum, same weight and embeddings */
RegulatorVector operator+(const RegulatorVector& a, const RegulatorVector& b);

}  // namespace nrk

#endif
