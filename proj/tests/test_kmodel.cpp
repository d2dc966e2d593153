#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nrk/kmodel.hpp"

using namespace nrk;

namespace {

size_t borel(int r1, int r2, int p)
{
    if (p == 1)
        return r1 + r2 - 1;
    return p % 2 == 0 ? r2 : r1 + r2;
}

GradedElement<mpq_class> random_element(const GradedKAlgebra& m, int d, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> u(-9, 9);
    GradedElement<mpq_class> b{d, {}};
    for (size_t i = 0; i < m.dimension(d); ++i)
        b.coords.emplace_back(u(rng), 1 + (rng() % 5));
    for (auto& c : b.coords)
        c.canonicalize();
    return b;
}

}  // namespace

TEST_CASE("generator dimensions")
{
    GradedKAlgebra q(fx::emb(fx::rationals()));
    CHECK(q.dimension(-1) == 1);
    CHECK(q.dimension(-3) == 0);
    CHECK(q.dimension(-5) == 1);
    GradedKAlgebra g(fx::emb(fx::gaussian()));
    CHECK(g.dimension(-1) == 1);
    CHECK(g.dimension(-3) == 1);
    CHECK(g.dimension(-5) == 1);
    GradedKAlgebra s(fx::emb(fx::sqrt2()));
    CHECK(s.dimension(-1) == 2);
    CHECK(s.dimension(-3) == 0);
    CHECK(s.dimension(-5) == 2);
    CHECK(s.dimension(-25) == 2);  // above max_p
    CHECK(s.dimension(0) == 1);
}

TEST_CASE("borel ranks")
{
    for (const auto& k : {fx::rationals(), fx::gaussian(), fx::sqrt2(), fx::golden(), fx::sqrt_minus5(), fx::cubic23()}) {
        GradedKAlgebra m(fx::emb(k));
        auto [r1, r2] = m.signature();
        CHECK(m.rank_in_degree(0) == 1);
        for (int p = 1; p <= 6; ++p)
            CHECK(m.rank_in_degree(1 - 2 * p) == borel(r1, r2, p));
        CHECK_THROWS_AS(m.rank_in_degree(-2), domain_error);
        CHECK_THROWS_AS(m.rank_in_degree(1), domain_error);
    }
}

TEST_CASE("p map and splitting")
{
    GradedKAlgebra s(fx::emb(fx::sqrt2()));
    GradedElement<mpq_class> x1{-1, {1, 0}};
    CHECK(p_map(x1, s) == 1);
    CHECK(p_map(GradedElement<mpq_class>{-1, {1, -1}}, s) == 0);
    CHECK(p_map(GradedElement<mpq_class>{-1, {0, 0}}, s) == 0);
    CHECK(project_M(x1, s) == GradedElement<mpq_class>{-1, {mpq_class(1, 2), mpq_class(-1, 2)}});
    GradedElement<mpq_class> m{-1, {3, -3}};
    CHECK(project_M(m, s) == m);
    CHECK_THROWS_AS(p_map(GradedElement<mpq_class>{-3, {}}, s), domain_error);

    std::mt19937_64 rng(47);
    for (const auto& k : {fx::gaussian(), fx::cubic23(), fx::bloch_family(4)}) {
        GradedKAlgebra mk(fx::emb(k));
        for (int t = 0; t < 20; ++t) {
            auto b = random_element(mk, -1, rng);
            auto pb = project_M(b, mk);
            CHECK(p_map(pb, mk) == 0);
            CHECK(project_M(pb, mk) == pb);
        }
    }
}

TEST_CASE("square zero graded commutative ring")
{
    std::mt19937_64 rng(53);
    for (const auto& k : {fx::rationals(), fx::gaussian(), fx::cubic23()}) {
        GradedKAlgebra m(fx::emb(k));
        GradedElement<mpq_class> one{0, {1}};
        for (int t = 0; t < 10; ++t) {
            int d1 = 1 - 2 * (1 + static_cast<int>(rng() % 4)), d2 = 1 - 2 * (1 + static_cast<int>(rng() % 4));
            auto a = random_element(m, d1, rng), b = random_element(m, d2, rng), c = random_element(m, 0, rng);
            CHECK(multiply(one, a, m) == a);
            CHECK(multiply(a, one, m) == a);
            auto ab = multiply(a, b, m), ba = multiply(b, a, m);
            CHECK(ab.degree == d1 + d2);
            CHECK(ab.coords.empty());
            CHECK(ab == ba);  // (-1)^{odd*odd} = -1 acting on zero
            CHECK(multiply(multiply(c, a, m), b, m) == multiply(c, multiply(a, b, m), m));
            CHECK(multiply(c, a, m) == multiply(a, c, m));
            auto c2 = random_element(m, 0, rng);
            CHECK(multiply(multiply(c, c2, m), a, m) == multiply(c, multiply(c2, a, m), m));
        }
    }
}

TEST_CASE("regulator embeddings")
{
    NumberField s = fx::sqrt2();
    GradedKAlgebra ms(fx::emb(s));
    auto u = embed_unit(fx::el(s, "1+x"), ms);
    CHECK(abs(u.coords[0] + u.coords[1]) < fx::tol(50));
    CHECK(abs(p_map(u, ms)) < fx::tol(50));
    auto z = embed_unit(s.rational(-1), ms);
    for (const auto& x : z.coords)
        CHECK(x.is_zero());

    NumberField c = fx::cubic23();
    GradedKAlgebra mc(fx::emb(c));
    CHECK(abs(p_map(embed_unit(c.generator(), mc), mc)) < fx::tol(45));
    PrecisionContext ctx{50, 10};
    FieldElement l = c.generator(), mu = (c.one() - l).inverse();
    auto k3 = embed_k3(BlochElement{{l, mu}, {2, 1}}, mc, ctx);
    REQUIRE(k3.coords.size() == 1);
    size_t rep = mc.generators(-3)[0].embedding;
    CHECK(mc.embeddings()->root(rep).im.sign() > 0);
    Real expect = -(bloch_wigner(evaluate(l, *mc.embeddings(), rep), ctx) * 3);
    CHECK(abs(k3.coords[0] - expect) < fx::tol(45));
}
