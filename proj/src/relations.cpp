#include "nrk/relations.hpp"

#include <algorithm>

#include "nrk/errors.hpp"

namespace nrk {

FieldElement evaluate_word(const std::vector<FieldElement>& gens, const IntVector& exps)
{
    if (gens.empty())
        throw domain_error("empty generator list");
    FieldElement num = gens.front().field().one();
    FieldElement den = num;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (exps[i] == 0)
            continue;
        if (!exps[i].fits_slong_p())
            throw domain_error("exponent too large");
        long e = exps[i].get_si();
        if (e > 0)
            num = num * gens[i].pow(e);
        else
            den = den * gens[i].pow(-e);
    }
    return num / den;
}

namespace {

std::vector<mpz_class> prime_factors(mpz_class n)
{
    std::vector<mpz_class> ps;
    for (mpz_class p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

mpz_class verified_torsion_order(const std::vector<FieldElement>& gens, const IntMatrix& rel)
{
    const size_t k = gens.size();
    if (rel.rows() == 0)
        return 1;
    SmithForm snf = smith_form(rel);
    IntMatrix vinv = unimodular_inverse(snf.right);
    mpz_class w = 1;
    size_t torsion_coords = 0;
    for (size_t i = 0; i < k; ++i) {
        const mpz_class& d = snf.diagonal[i];
        if (d <= 1)
            continue;
        ++torsion_coords;
        w = d;
        FieldElement zeta = evaluate_word(gens, vinv.row(i));
        if (zeta.pow(d.get_si()) != zeta.field().one())
            throw precision_error("torsion generator does not have the predicted order");
        for (const auto& q : prime_factors(d))
            if (zeta.pow(mpz_class(d / q).get_si()) == zeta.field().one())
                throw precision_error("torsion generator has smaller order than predicted");
    }
    if (torsion_coords > 1)
        throw precision_error("relation lattice predicts non-cyclic roots of unity");
    return w;
}

}  // namespace

MultiplicativePresentation relation_lattice(const std::vector<FieldElement>& elems,
                                            std::shared_ptr<const EmbeddingSet> emb)
{
    for (const auto& g : elems)
        if (!is_unit(g))
            throw domain_error("relation lattice input is not a unit of R");

    MultiplicativePresentation p;
    p.generators = elems;
    p.embeddings = emb;
    const size_t k = elems.size();
    p.relations = IntMatrix(0, k);
    p.torsion_order = 1;
    if (k == 0)
        return p;

    const EmbeddingSet& e = *emb;
    const bits_t bits = e.bits();
    const std::vector<size_t> reps = e.orbit_representatives();
    const size_t r = reps.size();
    const long scale_digits = std::max(6, e.precision() - guard_digits);
    const Real scale = pow10(scale_digits, bits);
    const Real two_pi = Real::pi(bits) * 2;

    /* rows: [ e_i | round(C log|sigma_j g_i|) | round(C arg(sigma_0 g_i) / 2pi) ],
     * plus [ 0 | 0 | C ] to absorb the integer part of the argument */
    const size_t cols = k + r + 1;
    IntMatrix basis(k + 1, cols);
    for (size_t i = 0; i < k; ++i) {
        basis(i, i) = 1;
        for (size_t j = 0; j < r; ++j) {
            Complex v = evaluate(elems[i], e, reps[j]);
            basis(i, k + j) = round_to_integer(log(abs(v)) * scale);
        }
        Complex v0 = evaluate(elems[i], e, 0);
        basis(i, k + r) = round_to_integer(arg(v0) / two_pi * scale);
    }
    basis(k, k + r) = round_to_integer(scale);

    IntMatrix reduced = lll_reduce(basis);
    const mpz_class threshold = round_to_integer(pow10(scale_digits / 2, bits));
    IntMatrix candidates(0, k);
    for (size_t i = 0; i < reduced.rows(); ++i) {
        bool small = true;
        for (size_t j = k; j < cols && small; ++j)
            if (abs(reduced(i, j)) >= threshold)
                small = false;
        if (!small)
            continue;
        IntVector v = reduced.row(i);
        v.resize(k);
        if (std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; }))
            continue;
        if (evaluate_word(elems, v) != elems.front().field().one())
            throw precision_error("candidate multiplicative relation failed exact verification");
        candidates.append_row(v);
    }
    if (candidates.rows() > 0)
        p.relations = hermite_form(candidates).basis;
    p.torsion_order = verified_torsion_order(elems, p.relations);
    return p;
}

MultiplicativePresentation relation_lattice(const std::vector<FieldElement>& elems, int digits)
{
    if (elems.empty())
        throw domain_error("relation lattice needs at least one element to fix the field");
    auto emb = std::make_shared<const EmbeddingSet>(embeddings(elems.front().field(), digits));
    return relation_lattice(elems, std::move(emb));
}

IntVector coordinates_of(const FieldElement& x, const MultiplicativePresentation& p, int exponent_bound)
{
    if (!is_unit(x))
        throw domain_error("element is not a unit of R");
    const size_t k = p.size();
    std::vector<FieldElement> extended{x};
    extended.insert(extended.end(), p.generators.begin(), p.generators.end());
    MultiplicativePresentation ext = relation_lattice(extended, p.embeddings);
    if (ext.relations.rows() == 0 || ext.relations(0, 0) != 1)
        throw presentation_incomplete_error("element is not in the subgroup generated by the presentation");

    IntVector e(k);
    for (size_t i = 0; i < k; ++i)
        e[i] = -ext.relations(0, i + 1);
    e = reduce_by_hnf(p.relations, std::move(e));
    for (const auto& c : e)
        if (abs(c) > exponent_bound)
            throw presentation_incomplete_error("coordinates exceed the exponent bound");
    if (evaluate_word(p.generators, e) != x)
        throw precision_error("coordinates failed exact verification");
    return e;
}

bool WedgeClass::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](const mpz_class& c) { return c == 0; });
}

namespace {

size_t pair_index(size_t i, size_t j, size_t k)
{
    /* position of e_i ^ e_j, i < j, in lexicographic order */
    return i * k - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

ExteriorSquare::ExteriorSquare(size_t generators, const IntMatrix& relations) : k_(generators)
{
    const size_t m = k_ * (k_ - (k_ > 0 ? 1 : 0)) / 2;
    IntMatrix a(0, m);
    for (size_t r = 0; r < relations.rows(); ++r)
        for (size_t j = 0; j < k_; ++j) {
            IntVector row(m, 0);
            /* (sum_a rho_a e_a) ^ e_j */
            for (size_t i = 0; i < k_; ++i) {
                const mpz_class& c = relations(r, i);
                if (c == 0 || i == j)
                    continue;
                if (i < j)
                    row[pair_index(i, j, k_)] += c;
                else
                    row[pair_index(j, i, k_)] -= c;
            }
            a.append_row(row);
        }
    SmithForm snf = smith_form(a);
    right_ = std::move(snf.right);
    for (size_t i = 0; i < m; ++i)
        if (snf.diagonal[i] != 1) {
            active_.push_back(i);
            moduli_.push_back(snf.diagonal[i]);
        }
}

ExteriorSquare::ExteriorSquare(const MultiplicativePresentation& p) : ExteriorSquare(p.size(), p.relations) {}

std::vector<mpz_class> ExteriorSquare::torsion_invariants() const
{
    std::vector<mpz_class> t;
    for (const auto& d : moduli_)
        if (d > 1)
            t.push_back(d);
    return t;
}

size_t ExteriorSquare::free_rank() const
{
    return static_cast<size_t>(std::count(moduli_.begin(), moduli_.end(), mpz_class(0)));
}

WedgeClass ExteriorSquare::normalize(IntVector y) const
{
    for (size_t i = 0; i < y.size(); ++i)
        if (moduli_[i] > 1)
            mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), moduli_[i].get_mpz_t());
    return WedgeClass{std::move(y)};
}

WedgeClass ExteriorSquare::reduce(const IntVector& w) const
{
    IntVector y = mul(w, right_);
    IntVector out;
    out.reserve(active_.size());
    for (size_t i : active_)
        out.push_back(y[i]);
    return normalize(std::move(out));
}

WedgeClass ExteriorSquare::wedge(const IntVector& a, const IntVector& b) const
{
    const size_t m = right_.rows();
    IntVector w(m, 0);
    for (size_t i = 0; i < k_; ++i)
        for (size_t j = i + 1; j < k_; ++j)
            w[pair_index(i, j, k_)] = a[i] * b[j] - a[j] * b[i];
    return reduce(w);
}

WedgeClass ExteriorSquare::add(const WedgeClass& a, const WedgeClass& b) const
{
    IntVector y = a.coords;
    for (size_t i = 0; i < y.size(); ++i)
        y[i] += b.coords[i];
    return normalize(std::move(y));
}

WedgeClass ExteriorSquare::scale(const WedgeClass& a, const mpz_class& n) const
{
    IntVector y = a.coords;
    for (auto& c : y)
        c *= n;
    return normalize(std::move(y));
}

WedgeClass ExteriorSquare::zero() const { return WedgeClass{IntVector(moduli_.size(), 0)}; }

IntVector ExteriorSquare::free_part(const WedgeClass& a) const
{
    IntVector f;
    for (size_t i = 0; i < moduli_.size(); ++i)
        if (moduli_[i] == 0)
            f.push_back(a.coords[i]);
    return f;
}

WedgeClass steinberg_image(const FieldElement& lambda, const MultiplicativePresentation& p,
                           const ExteriorSquare& sq)
{
    if (!is_in_Rcirc(lambda))
        throw domain_error("steinberg image needs lambda and 1 - lambda to be units");
    IntVector a = coordinates_of(lambda, p);
    IntVector b = coordinates_of(lambda.field().one() - lambda, p);
    return sq.wedge(a, b);
}

WedgeClass steinberg_sum(const BlochElement& x, const MultiplicativePresentation& p, const ExteriorSquare& sq)
{
    WedgeClass acc = sq.zero();
    for (size_t i = 0; i < x.support.size(); ++i)
        acc = sq.add(acc, sq.scale(steinberg_image(x.support[i], p, sq), x.multiplicities[i]));
    return acc;
}

bool BlochKernel::contains(const IntVector& v) const { return in_row_lattice(lattice, v); }

bool BlochKernel::vanishes_only_modulo_torsion(const IntVector& v) const
{
    return in_row_lattice(modulo_torsion, v) && !in_row_lattice(lattice, v);
}

BlochKernel bloch_kernel(const std::vector<FieldElement>& candidates, const MultiplicativePresentation& p)
{
    const size_t m = candidates.size();
    BlochKernel out;
    out.lattice = IntMatrix(0, m);
    out.modulo_torsion = IntMatrix(0, m);
    if (m == 0)
        return out;

    ExteriorSquare sq(p);
    const size_t c = sq.dimension();
    std::vector<WedgeClass> images;
    for (const auto& lambda : candidates)
        images.push_back(steinberg_image(lambda, p, sq));

    /* kernel of Z^m -> Z^free + sum Z/d: append d_j e_j for torsion coords */
    IntMatrix full(0, c);
    for (const auto& w : images)
        full.append_row(w.coords);
    for (size_t j = 0; j < c; ++j)
        if (sq.moduli()[j] > 1) {
            IntVector row(c, 0);
            row[j] = sq.moduli()[j];
            full.append_row(row);
        }
    IntMatrix k = left_kernel(full);
    IntMatrix projected(0, m);
    for (size_t i = 0; i < k.rows(); ++i) {
        IntVector row = k.row(i);
        row.resize(m);
        projected.append_row(row);
    }
    out.lattice = projected.rows() ? hermite_form(projected).basis : projected;

    IntMatrix free_images(0, sq.free_rank());
    for (const auto& w : images)
        free_images.append_row(sq.free_part(w));
    out.modulo_torsion = left_kernel(free_images);

    for (size_t i = 0; i < out.lattice.rows(); ++i) {
        BlochElement x;
        for (size_t j = 0; j < m; ++j) {
            if (out.lattice(i, j) == 0)
                continue;
            x.support.push_back(candidates[j]);
            x.multiplicities.push_back(out.lattice(i, j));
        }
        out.basis.push_back(std::move(x));
    }
    return out;
}

}  // namespace nrk
