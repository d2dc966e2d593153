#include "nrk/kmodel.hpp"

#include "nrk/regulator.hpp"

namespace nrk {

namespace {

std::vector<KGenerator> build_degree(const EmbeddingSet& e, int p)
{
    const int d = 1 - 2 * p;
    std::vector<KGenerator> out;
    for (size_t i : e.orbit_representatives()) {
        bool real = e.is_real(i);
        if (real && p % 2 == 0)
            continue;
        out.push_back({i, !real, "x(sigma" + std::to_string(i) + ")_{" + std::to_string(d) + "}"});
    }
    /* reals come before pairs in embedding order already */
    return out;
}

}  // namespace

GradedKAlgebra::GradedKAlgebra(std::shared_ptr<const EmbeddingSet> e, int max_p) : emb_(std::move(e)), max_p_(max_p)
{
    if (max_p < 1)
        throw domain_error("max_p must be positive");
    for (int p = 1; p <= max_p; ++p)
        table_.push_back(build_degree(*emb_, p));
}

std::vector<KGenerator> GradedKAlgebra::generators(int d) const
{
    if (d > 0)
        throw domain_error("degrees are non-positive");
    if (d == 0 || d % 2 == 0)
        return {};
    int p = (1 - d) / 2;
    if (p <= max_p_)
        return table_[p - 1];
    return build_degree(*emb_, p);
}

size_t GradedKAlgebra::dimension(int d) const
{
    if (d == 0)
        return 1;
    return generators(d).size();
}

size_t GradedKAlgebra::rank_in_degree(int d) const
{
    if (d > 0 || (d != 0 && d % 2 == 0))
        throw domain_error("unsupported degree " + std::to_string(d));
    size_t dim = dimension(d);
    return d == -1 ? dim - 1 : dim;
}

long GradedKAlgebra::multiplicity(size_t generator_index) const { return table_[0].at(generator_index).pair ? 2 : 1; }

GradedElement<Real> embed_unit(const FieldElement& lambda, const GradedKAlgebra& m)
{
    RegulatorVector v = unit_regulator(lambda, m.embeddings());
    GradedElement<Real> b{-1, {}};
    for (const auto& g : m.generators(-1))
        b.coords.push_back(v.values[g.embedding]);
    return b;
}

GradedElement<Real> embed_k3(const BlochElement& x, const GradedKAlgebra& m, const PrecisionContext& ctx,
                             const MultiplicativePresentation* presentation)
{
    RegulatorVector v = k3_regulator(x, m.embeddings(), ctx, presentation);
    GradedElement<Real> b{-3, {}};
    for (const auto& g : m.generators(-3))
        b.coords.push_back(v.values[g.embedding]);
    return b;
}

}  // namespace nrk
