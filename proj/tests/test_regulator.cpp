#include <doctest.h>

#include "fixtures.hpp"
#include "nrk/errors.hpp"
#include "nrk/regulator.hpp"

using namespace nrk;

namespace {

Real sum(const RegulatorVector& v)
{
    Real s(v.values.front().precision());
    for (const auto& x : v.values)
        s += x;
    return s;
}

}  // namespace

TEST_CASE("unit regulator")
{
    auto e = fx::emb(fx::sqrt2());
    RegulatorVector m1 = unit_regulator(fx::sqrt2().rational(-1), e);
    for (const auto& x : m1.values)
        CHECK(x.is_zero());
    RegulatorVector v = unit_regulator(fx::el(fx::sqrt2(), "1+x"), e);
    Real s2 = sqrt(Real(2L, e->bits()));
    CHECK(abs(v.values[1] - log(s2 + 1)) < fx::tol(50));
    CHECK(abs(v.values[0] - log(s2 - 1)) < fx::tol(50));
    CHECK(abs(sum(v)) < fx::tol(50));
    CHECK_THROWS_AS(unit_regulator(fx::sqrt2().rational(2), e), domain_error);

    auto c = fx::emb(fx::cubic23());
    RegulatorVector w = unit_regulator(fx::cubic23().generator(), c);
    CHECK(abs(sum(w)) < fx::tol(40));
    CHECK(w.values[1] == w.values[2]);
}

TEST_CASE("unit regulator is a homomorphism and s vanishes on it")
{
    NumberField k = fx::bloch_family(4);
    auto e = fx::emb(k);
    FieldElement a = k.generator(), b = k.one() - k.generator();
    RegulatorVector va = unit_regulator(a, e), vb = unit_regulator(b, e), vab = unit_regulator(a * b, e);
    RegulatorVector s = va + vb;
    for (size_t i = 0; i < e->size(); ++i)
        CHECK(abs(s.values[i] - vab.values[i]) < fx::tol(45));
    CHECK(abs(s_map(vab)) < fx::tol(45));
}

TEST_CASE("s map")
{
    auto e = fx::emb(fx::cubic23());
    RegulatorVector v{e, {Real(2L, 128), Real(128), Real(128)}, Weight::unit};
    CHECK(abs(s_map(v) - Real(mpq_class(2, 3), 128)) < fx::tol(35));
    RegulatorVector c{e, {Real(5L, 128), Real(5L, 128), Real(5L, 128)}, Weight::unit};
    CHECK(s_map(c) == Real(5L, 128));
    v.weight = Weight::k3;
    CHECK_THROWS_AS(s_map(v), domain_error);
}

TEST_CASE("k3 regulator of the trinomial family")
{
    PrecisionContext ctx{50, 10};
    for (int n = 2; n <= 5; ++n) {
        NumberField k = fx::bloch_family(n);
        auto e = fx::emb(k);
        FieldElement l = k.generator(), mu = (k.one() - l).inverse();
        BlochElement x{{l, mu}, {n, 1}};
        RegulatorVector v = k3_regulator(x, e, ctx);
        CHECK(v.weight == Weight::k3);
        for (size_t i = 0; i < e->size(); ++i) {
            if (e->is_real(i)) {
                CHECK(v.values[i].is_zero());
                continue;
            }
            CHECK(v.values[i] == -v.values[e->conjugate(i)]);
            Real expect = -(bloch_wigner(evaluate(l, *e, i), ctx) * static_cast<long>(n + 1));
            CHECK(abs(v.values[i] - expect) < fx::tol(45));
        }
    }
}

TEST_CASE("k3 regulator: zero element, totally real support, kernel check")
{
    PrecisionContext ctx{50, 10};
    NumberField g = fx::golden();
    auto e = fx::emb(g);
    RegulatorVector z = k3_regulator(BlochElement{}, e, ctx);
    for (const auto& x : z.values)
        CHECK(x.is_zero());
    RegulatorVector r = k3_regulator(BlochElement{{g.generator()}, {2}}, e, ctx);
    for (const auto& x : r.values)
        CHECK(x.is_zero());

    NumberField k = fx::cubic23();
    auto ek = fx::emb(k);
    FieldElement l = k.generator();
    auto p = relation_lattice({k.rational(-1), l, k.one() - l}, ek);
    CHECK_THROWS_AS(k3_regulator(BlochElement{{l}, {1}}, ek, ctx, &p), domain_error);
    FieldElement mu = (k.one() - l).inverse();
    auto p2 = relation_lattice({k.rational(-1), l, k.one() - l, mu, k.one() - mu}, ek);
    CHECK_NOTHROW(k3_regulator(BlochElement{{l, mu}, {2, 1}}, ek, ctx, &p2));
}

TEST_CASE("k3 regulator is additive")
{
    PrecisionContext ctx{50, 10};
    NumberField k = fx::cubic23();
    auto e = fx::emb(k);
    FieldElement l = k.generator(), mu = (k.one() - l).inverse();
    RegulatorVector a = k3_regulator(BlochElement{{l}, {2}}, e, ctx);
    RegulatorVector b = k3_regulator(BlochElement{{mu}, {1}}, e, ctx);
    RegulatorVector ab = k3_regulator(BlochElement{{l, mu}, {2, 1}}, e, ctx);
    RegulatorVector s = a + b;
    for (size_t i = 0; i < e->size(); ++i)
        CHECK(abs(s.values[i] - ab.values[i]) < fx::tol(45));
}
