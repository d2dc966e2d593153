#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nrk/errors.hpp"
#include "nrk/relations.hpp"
#include "oracles.hpp"

using namespace nrk;

namespace {

IntVector iv(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

void check_relations_verified(const MultiplicativePresentation& p)
{
    for (size_t i = 0; i < p.relations.rows(); ++i)
        CHECK(evaluate_word(p.generators, p.relations.row(i)) == p.generators.front().field().one());
    CHECK(hermite_form(p.relations).basis == p.relations);
}

}  // namespace

TEST_CASE("relation lattices of small unit groups")
{
    NumberField q = fx::rationals();
    auto p = relation_lattice({q.rational(-1)}, 50);
    CHECK(p.relations == IntMatrix::from_rows({iv({2})}, 1));
    CHECK(p.torsion_order == 2);

    NumberField s = fx::sqrt2();
    auto p2 = relation_lattice({fx::el(s, "1+x"), fx::el(s, "-1+x")}, 50);
    CHECK(p2.relations == IntMatrix::from_rows({iv({1, 1})}, 2));
    CHECK(p2.torsion_order == 1);
    check_relations_verified(p2);

    NumberField g = fx::golden();
    auto p3 = relation_lattice({g.generator(), g.one() - g.generator(), g.rational(-1)}, 50);
    check_relations_verified(p3);
    // oracle: every small exponent vector with product one lies in the lattice
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -2; c <= 2; ++c) {
                IntVector e = iv({a, b, c});
                bool one = evaluate_word(p3.generators, e) == g.one();
                CHECK(one == in_row_lattice(p3.relations, e));
            }
    CHECK(p3.torsion_order == 2);

    NumberField i = fx::gaussian();
    auto p4 = relation_lattice({i.generator()}, 50);
    CHECK(p4.torsion_order == 4);
    CHECK_THROWS_AS(relation_lattice({i.rational(2)}, 50), domain_error);
}

TEST_CASE("relations among units of the cubic field")
{
    NumberField k = fx::cubic23();
    FieldElement l = k.generator();
    std::vector<FieldElement> gens{k.rational(-1), l, k.one() - l, l.pow(5) * (k.one() - l).pow(-2)};
    auto p = relation_lattice(gens, 50);
    check_relations_verified(p);
    CHECK(p.relations.rows() == 3);  // rank of the unit group is 1
    CHECK(p.torsion_order == 2);
    IntVector x = coordinates_of(l.pow(7) * k.rational(-1), p);
    CHECK(evaluate_word(gens, x) == l.pow(7) * k.rational(-1));
    CHECK_THROWS_AS(coordinates_of(l.pow(200), p), presentation_incomplete_error);
    CHECK_THROWS_AS(coordinates_of(k.rational(3), p), domain_error);
}

TEST_CASE("exterior squares of small groups")
{
    ExteriorSquare z1(1, IntMatrix(0, 1));
    CHECK(z1.dimension() == 0);
    ExteriorSquare z2(2, IntMatrix(0, 2));
    CHECK(z2.free_rank() == 1);
    CHECK(z2.torsion_invariants().empty());
    ExteriorSquare t(2, IntMatrix::from_rows({iv({2, 0})}, 2));
    CHECK(t.free_rank() == 0);
    CHECK(t.torsion_invariants() == std::vector<mpz_class>{2});
    CHECK_FALSE(t.wedge(iv({1, 0}), iv({0, 1})).is_zero());
    CHECK(t.wedge(iv({2, 0}), iv({0, 1})).is_zero());
}

TEST_CASE("exterior square matches the structure oracle")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        size_t free = trial % 4;
        long t = 1 + trial % 12;
        size_t k = free + 2;
        // Z^free + Z/t + Z/1 then a random unimodular change of basis
        IntMatrix rel(0, k);
        IntVector tor(k, 0), one(k, 0);
        tor[free] = t;
        one[free + 1] = 1;
        rel.append_row(tor);
        rel.append_row(one);
        IntMatrix w = IntMatrix::identity(k);
        for (int s = 0; s < 8; ++s) {
            size_t a = rng() % k, b = rng() % k;
            if (a != b)
                w.add_row(a, b, small(rng));
        }
        IntMatrix rows = rel * w;
        IntMatrix mixed = rows;
        mixed.append_row(mul(iv({3, -1}), IntMatrix::from_rows({rows.row(0), rows.row(1)}, k)));
        ExteriorSquare sq(k, mixed);

        std::vector<mpz_class> torsion;
        if (t > 1)
            torsion.push_back(t);
        oracle::GroupShape expect = oracle::exterior_square_shape(free, torsion);
        oracle::GroupShape got;
        for (const auto& d : sq.moduli())
            oracle::add_cyclic(got, d);
        CHECK(got == expect);
        CHECK(oracle::cokernel_by_minors(oracle::wedge_presentation(k, rows), k * (k - 1) / 2) == expect);

        // bilinearity and antisymmetry on random vectors
        auto rv = [&] {
            IntVector v(k);
            for (auto& x : v)
                x = small(rng) * 3 + small(rng);
            return v;
        };
        IntVector a = rv(), a2 = rv(), b = rv();
        IntVector sum(k);
        for (size_t i = 0; i < k; ++i)
            sum[i] = a[i] + a2[i];
        CHECK(sq.wedge(sum, b) == sq.add(sq.wedge(a, b), sq.wedge(a2, b)));
        CHECK(sq.add(sq.wedge(a, b), sq.wedge(b, a)).is_zero());
        CHECK(sq.wedge(a, a).is_zero());
        // relations wedge to zero
        CHECK(sq.wedge(mixed.row(0), b).is_zero());
    }
}

TEST_CASE("golden ratio: the steinberg symbol has order two")
{
    NumberField g = fx::golden();
    auto p = relation_lattice({g.rational(-1), g.generator()}, 50);
    ExteriorSquare sq(p);
    CHECK(sq.torsion_invariants() == std::vector<mpz_class>{2});
    CHECK(sq.free_rank() == 0);
    WedgeClass w = steinberg_image(g.generator(), p, sq);
    CHECK_FALSE(w.is_zero());
    CHECK(w == sq.wedge(iv({0, 1}), iv({1, 0})));
    BlochKernel k = bloch_kernel({g.generator()}, p);
    CHECK(k.lattice == IntMatrix::from_rows({iv({2})}, 1));
    CHECK(k.vanishes_only_modulo_torsion(iv({1})));
    CHECK(bloch_kernel({}, p).basis.empty());
}

TEST_CASE("bloch example family")
{
    for (int n = 2; n <= 5; ++n) {
        NumberField k = fx::bloch_family(n);
        FieldElement l = k.generator();
        FieldElement mu = (k.one() - l).inverse();
        auto p = relation_lattice({k.rational(-1), l, k.one() - l, mu, k.one() - mu}, 50);
        check_relations_verified(p);
        BlochKernel ker = bloch_kernel({l, mu}, p);
        CHECK(ker.contains(iv({n, 1})));
        ExteriorSquare sq(p);
        for (const auto& x : ker.basis)
            CHECK(steinberg_sum(x, p, sq).is_zero());
        BlochElement x{{l, mu}, {n, 1}};
        CHECK(steinberg_sum(x, p, sq).is_zero());
    }
}

TEST_CASE("steinberg image of a root of lambda^m = 1 - lambda vanishes")
{
    // 1 - x = x^2 in Q[x]/(x^2 + x - 1)
    NumberField k = fx::field({-1, 1, 1});
    FieldElement l = k.generator();
    REQUIRE(k.one() - l == l.pow(2));
    auto p = relation_lattice({k.rational(-1), l}, 50);
    ExteriorSquare sq(p);
    CHECK(steinberg_image(l, p, sq).is_zero());
    CHECK_THROWS_AS(steinberg_image(k.rational(2), p, sq), domain_error);
}
