#include "nrk/heights.hpp"

#include "nrk/errors.hpp"

namespace nrk {

namespace {

void check_invariant(const std::vector<Real>& f, const EmbeddingSet& e)
{
    if (f.size() != e.size())
        throw domain_error("tuple needs one value per embedding");
    for (size_t i = 0; i < e.size(); ++i)
        if (f[i] != f[e.conjugate(i)])
            throw domain_error("tuple is not invariant under complex conjugation");
}

void check_positive(const std::vector<Real>& f)
{
    for (const auto& x : f)
        if (x.sign() <= 0)
            throw domain_error("tuple entries must be positive");
}

Real mean(const std::vector<Real>& v)
{
    Real acc(v.front().precision());
    for (const auto& x : v)
        acc += x;
    return acc / static_cast<long>(v.size());
}

}  // namespace

void DiffK0Class::validate() const
{
    if (order_hint == 0)
        throw domain_error("order hint must be positive");
    if (!embeddings)
        throw domain_error("class has no embedding data");
    check_invariant(scaling_vector, *embeddings);
}

Real height(const DiffK0Class& x)
{
    x.validate();
    return mean(x.scaling_vector) / static_cast<long>(x.order_hint);
}

Real height_scaled_trivial(const std::vector<Real>& f, const EmbeddingSet& e)
{
    check_invariant(f, e);
    check_positive(f);
    Real acc(f.front().precision());
    for (const auto& x : f)
        acc += log(x);
    return -acc / static_cast<long>(2 * f.size());
}

std::vector<Real> scaling_alpha(unsigned rank, const std::vector<Real>& f, const EmbeddingSet& e)
{
    if (rank == 0)
        throw domain_error("rank must be positive");
    check_invariant(f, e);
    check_positive(f);
    std::vector<Real> out;
    for (const auto& x : f)
        out.push_back(-(log(x) * static_cast<long>(rank)) / 2);
    return out;
}

DiffK0Class c_hat(const MetrizedLineBundle& l, unsigned n, const FieldElement& generator)
{
    if (n == 0)
        throw domain_error("N must be positive");
    if (generator.is_zero() || FractionalIdeal::principal(generator) != power(l.ideal, n))
        throw principality_error("generator does not generate the N-th power of the ideal");
    MetrizedLineBundle ln = tensor_power(l, n);
    DiffK0Class x;
    x.order_hint = n;
    x.embeddings = l.embeddings;
    x.provenance = "metrized line bundle";
    for (const auto& h : ln.squared_norms(generator))
        x.scaling_vector.push_back(-log(h) / 2);
    return x;
}

Real c_hat_height(const MetrizedLineBundle& l, unsigned n, const FieldElement& generator)
{
    return height(c_hat(l, n, generator));
}

}  // namespace nrk
