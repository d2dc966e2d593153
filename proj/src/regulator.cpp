#include "nrk/regulator.hpp"

#include "nrk/errors.hpp"

namespace nrk {

RegulatorVector unit_regulator(const FieldElement& lambda, std::shared_ptr<const EmbeddingSet> e)
{
    if (!is_unit(lambda))
        throw domain_error("unit regulator needs a unit of R");
    RegulatorVector v;
    v.weight = Weight::unit;
    for (size_t i = 0; i < e->size(); ++i) {
        if (e->is_real(i) || e->root(i).im.sign() > 0) {
            v.values.push_back(log(abs(evaluate(lambda, *e, i))));
        } else {
            v.values.emplace_back(e->bits());
        }
    }
    /* the two members of a pair share one evaluation */
    for (size_t i = 0; i < e->size(); ++i)
        if (!e->is_real(i) && e->root(i).im.sign() < 0)
            v.values[i] = v.values[e->conjugate(i)];
    v.embeddings = std::move(e);
    return v;
}

RegulatorVector k3_regulator(const BlochElement& x, std::shared_ptr<const EmbeddingSet> e,
                             const PrecisionContext& ctx, const MultiplicativePresentation* presentation)
{
    ctx.validate();
    if (x.support.size() != x.multiplicities.size())
        throw domain_error("bloch element support and multiplicities differ in length");
    if (presentation) {
        ExteriorSquare sq(*presentation);
        if (!steinberg_sum(x, *presentation, sq).is_zero())
            throw domain_error("element is not in the Bloch kernel");
    }
    const size_t n = e->size();
    RegulatorVector v;
    v.weight = Weight::k3;
    v.values.assign(n, Real(e->bits()));
    const Real eps = pow10(-(ctx.digits / 2), ctx.bits());
    for (size_t i = 0; i < n; ++i) {
        if (e->is_real(i) || e->root(i).im.sign() < 0)
            continue;
        Real acc(ctx.bits());
        for (size_t j = 0; j < x.support.size(); ++j) {
            if (x.multiplicities[j] == 0)
                continue;
            Complex z = evaluate(x.support[j], *e, i);
            if (abs(z) < eps || abs(z - Complex(Real(1L, z.precision()))) < eps)
                throw degenerate_embedding_error("support element evaluates to 0 or 1 at an embedding");
            acc -= bloch_wigner(z, ctx) * Real(x.multiplicities[j], ctx.bits());
        }
        v.values[i] = acc;
        v.values[e->conjugate(i)] = -acc;
    }
    v.embeddings = std::move(e);
    return v;
}

Real s_map(const RegulatorVector& v)
{
    if (v.weight != Weight::unit)
        throw domain_error("s map is defined on unit-weight vectors only");
    if (v.values.empty())
        throw domain_error("empty regulator vector");
    Real acc(v.values.front().precision());
    for (const auto& x : v.values)
        acc += x;
    return acc / static_cast<long>(v.values.size());
}

RegulatorVector operator+(const RegulatorVector& a, const RegulatorVector& b)
{
    if (a.weight != b.weight || a.size() != b.size())
        throw domain_error("regulator vectors of different weight or length");
    RegulatorVector r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r.values[i] += b.values[i];
    return r;
}

}  // namespace nrk
