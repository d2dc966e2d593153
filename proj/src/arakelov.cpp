#include "nrk/arakelov.hpp"

#include "nrk/errors.hpp"
#include "nrk/intmat.hpp"

namespace nrk {

namespace {

QMatrix hnf_rows(const QMatrix& rows, size_t n)
{
    QMatrix h = rational_hermite_form(rows);
    if (h.rows() != n)
        throw domain_error("ideal generators do not span a full lattice");
    return h;
}

bool all_integral(const std::vector<mpq_class>& v)
{
    for (const auto& x : v)
        if (x.get_den() != 1)
            return false;
    return true;
}

}  // namespace

FractionalIdeal FractionalIdeal::from_rows(const NumberField& field, const QMatrix& rows)
{
    const size_t n = field.degree();
    if (rows.cols() != n)
        throw format_error("ideal basis rows have the wrong length");
    FractionalIdeal l(field, hnf_rows(rows, n));
    for (size_t i = 0; i < n; ++i) {
        FieldElement b = l.basis_element(i);
        for (size_t k = 0; k < n; ++k) {
            std::vector<mpq_class> unit_k(n, 0);
            unit_k[k] = 1;
            if (!l.contains(b * field.from_integral_coords(unit_k)))
                throw domain_error("lattice is not closed under multiplication by R");
        }
    }
    return l;
}

FractionalIdeal FractionalIdeal::generated_by(const std::vector<FieldElement>& gens)
{
    if (gens.empty())
        throw domain_error("ideal needs at least one generator");
    const NumberField& field = gens.front().field();
    const size_t n = field.degree();
    QMatrix rows(0, n);
    for (const auto& g : gens)
        for (size_t k = 0; k < n; ++k) {
            std::vector<mpq_class> unit_k(n, 0);
            unit_k[k] = 1;
            rows.append_row((g * field.from_integral_coords(unit_k)).integral_coords());
        }
    return FractionalIdeal(field, hnf_rows(rows, n));
}

FractionalIdeal FractionalIdeal::principal(const FieldElement& a)
{
    if (a.is_zero())
        throw domain_error("the zero ideal is not invertible");
    return generated_by({a});
}

FractionalIdeal FractionalIdeal::unit(const NumberField& field) { return principal(field.one()); }

FieldElement FractionalIdeal::basis_element(size_t i) const { return field_.from_integral_coords(basis_.row(i)); }

std::vector<mpq_class> FractionalIdeal::coordinates(const FieldElement& a) const
{
    std::vector<mpq_class> c = a.integral_coords();
    QMatrix inv = inverse(basis_);
    const size_t n = c.size();
    std::vector<mpq_class> out(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out[j] += c[i] * inv(i, j);
    return out;
}

bool FractionalIdeal::contains(const FieldElement& a) const { return all_integral(coordinates(a)); }

bool operator==(const FractionalIdeal& a, const FractionalIdeal& b)
{
    return a.field_ == b.field_ && a.basis_ == b.basis_;
}

mpq_class ideal_norm(const FractionalIdeal& l) { return abs(determinant(l.basis())); }

FractionalIdeal operator*(const FractionalIdeal& a, const FractionalIdeal& b)
{
    if (a.field() != b.field())
        throw domain_error("ideals over different fields");
    const size_t n = a.field().degree();
    std::vector<FieldElement> gens;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            gens.push_back(a.basis_element(i) * b.basis_element(j));
    QMatrix rows(0, n);
    for (const auto& g : gens)
        rows.append_row(g.integral_coords());
    return FractionalIdeal::from_rows(a.field(), rows);
}

FractionalIdeal scaled(const FractionalIdeal& l, const FieldElement& a)
{
    if (a.is_zero())
        throw domain_error("cannot scale an ideal by zero");
    const size_t n = l.field().degree();
    QMatrix rows(0, n);
    for (size_t i = 0; i < n; ++i)
        rows.append_row((a * l.basis_element(i)).integral_coords());
    return FractionalIdeal::from_rows(l.field(), rows);
}

FractionalIdeal power(const FractionalIdeal& l, unsigned n)
{
    FractionalIdeal r = FractionalIdeal::unit(l.field());
    for (unsigned i = 0; i < n; ++i)
        r = r * l;
    return r;
}

mpq_class index_quotient(const FractionalIdeal& l, const FieldElement& s)
{
    if (s.is_zero())
        throw domain_error("section must be nonzero");
    if (!l.contains(s))
        throw membership_error("section is not an element of the ideal");
    mpq_class q = abs(norm(s)) / ideal_norm(l);
    if (q.get_den() != 1 || q < 1)
        throw arithmetic_error("index quotient is not a positive integer");
    return q;
}

void MetrizedLineBundle::validate() const
{
    const EmbeddingSet& e = *embeddings;
    if (e.field() != ideal.field())
        throw domain_error("metric and ideal live over different fields");
    if (metric.values.size() != e.size())
        throw domain_error("metric needs one value per embedding");
    for (size_t i = 0; i < e.size(); ++i) {
        if (metric.values[i].sign() <= 0)
            throw domain_error("metric values must be positive");
        if (metric.values[i] != metric.values[e.conjugate(i)])
            throw domain_error("metric is not invariant under complex conjugation");
    }
}

std::vector<Real> MetrizedLineBundle::squared_norms(const FieldElement& s) const
{
    const EmbeddingSet& e = *embeddings;
    FieldElement ratio = s / ideal.reference_section();
    std::vector<Real> out;
    for (size_t i = 0; i < e.size(); ++i)
        out.push_back(metric.values[i] * norm2(evaluate(ratio, e, i)));
    return out;
}

MetrizedLineBundle make_bundle(FractionalIdeal ideal, Metric metric, std::shared_ptr<const EmbeddingSet> e)
{
    MetrizedLineBundle l{std::move(ideal), std::move(metric), std::move(e)};
    l.validate();
    return l;
}

MetrizedLineBundle standard_bundle(FractionalIdeal ideal, std::shared_ptr<const EmbeddingSet> e)
{
    Metric m;
    FieldElement s0 = ideal.reference_section();
    for (size_t i = 0; i < e->size(); ++i)
        m.values.push_back(norm2(evaluate(s0, *e, i)));
    return make_bundle(std::move(ideal), std::move(m), std::move(e));
}


Real arithmetic_degree(const MetrizedLineBundle& l, const std::optional<FieldElement>& s)
{
    FieldElement sec = s ? *s : l.ideal.reference_section();
    mpq_class idx = index_quotient(l.ideal, sec);
    const bits_t bits = l.embeddings->bits();
    Real acc = log(Real(idx, bits));
    Real half(bits);
    for (const auto& h : l.squared_norms(sec))
        half += log(h);
    acc -= half / 2;
    return acc / static_cast<long>(l.embeddings->size());
}

namespace {

void require_same(const MetrizedLineBundle& a, const MetrizedLineBundle& b)
{
    if (a.ideal.field() != b.ideal.field() || a.embeddings->size() != b.embeddings->size())
        throw domain_error("bundles over different fields");
}

/* values h(t) for a new reference section t of a lattice whose metric is
 * known through h(s) = values[sigma] |sigma(s / old)|^2 */
Metric rebase(const std::vector<Real>& values, const FieldElement& old, const FieldElement& fresh,
              const EmbeddingSet& e)
{
    FieldElement ratio = fresh / old;
    Metric m;
    for (size_t i = 0; i < e.size(); ++i)
        m.values.push_back(values[i] * norm2(evaluate(ratio, e, i)));
    return m;
}

}  // namespace

MetrizedLineBundle bundle_from_section(FractionalIdeal ideal, const FieldElement& s, const std::vector<Real>& h,
                                       std::shared_ptr<const EmbeddingSet> e)
{
    if (h.size() != e->size())
        throw domain_error("metric needs one value per embedding");
    if (!ideal.contains(s) || s.is_zero())
        throw membership_error("metric section is not a nonzero element of the ideal");
    FieldElement s0 = ideal.reference_section();
    Metric m = rebase(h, s, s0, *e);
    return make_bundle(std::move(ideal), std::move(m), std::move(e));
}

MetrizedLineBundle tensor(const MetrizedLineBundle& a, const MetrizedLineBundle& b)
{
    require_same(a, b);
    FractionalIdeal prod = a.ideal * b.ideal;
    std::vector<Real> base;
    for (size_t i = 0; i < a.metric.values.size(); ++i)
        base.push_back(a.metric.values[i] * b.metric.values[i]);
    FieldElement old = a.ideal.reference_section() * b.ideal.reference_section();
    Metric m = rebase(base, old, prod.reference_section(), *a.embeddings);
    return make_bundle(std::move(prod), std::move(m), a.embeddings);
}

MetrizedLineBundle twist_metric(const MetrizedLineBundle& l, const std::vector<Real>& lambda)
{
    const EmbeddingSet& e = *l.embeddings;
    if (lambda.size() != e.size())
        throw domain_error("twist needs one value per embedding");
    for (size_t i = 0; i < e.size(); ++i)
        if (lambda[i] != lambda[e.conjugate(i)])
            throw domain_error("twist is not invariant under complex conjugation");
    MetrizedLineBundle r = l;
    for (size_t i = 0; i < e.size(); ++i)
        r.metric.values[i] *= exp(lambda[i] * -2);
    return r;
}

MetrizedLineBundle transport(const MetrizedLineBundle& l, const FieldElement& a)
{
    FractionalIdeal moved = scaled(l.ideal, a);
    /* h'(t) = h(t / a) = values |sigma(t / (a s0))|^2 */
    Metric m = rebase(l.metric.values, a * l.ideal.reference_section(), moved.reference_section(), *l.embeddings);
    return make_bundle(std::move(moved), std::move(m), l.embeddings);
}

MetrizedLineBundle tensor_power(const MetrizedLineBundle& l, unsigned n)
{
    MetrizedLineBundle r = standard_bundle(FractionalIdeal::unit(l.ideal.field()), l.embeddings);
    for (unsigned i = 0; i < n; ++i)
        r = tensor(r, l);
    return r;
}

}  // namespace nrk
