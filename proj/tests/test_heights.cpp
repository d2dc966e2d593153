#include <doctest.h>

#include "fixtures.hpp"
#include "nrk/errors.hpp"
#include "nrk/heights.hpp"

using namespace nrk;

TEST_CASE("height of classes")
{
    auto e = fx::emb(fx::gaussian());
    const bits_t b = e->bits();
    DiffK0Class zero{1, {Real(b), Real(b)}, e, ""};
    CHECK(height(zero).is_zero());
    DiffK0Class c{1, {Real(3L, b), Real(3L, b)}, e, ""};
    CHECK(height(c) == Real(3L, b));
    auto r = fx::emb(fx::sqrt2());
    DiffK0Class v{2, {Real(5L, b), Real(5L, b)}, r, ""};
    CHECK(abs(height(v) - Real::from_string("2.5", b)) < fx::tol(50));
    DiffK0Class bad{1, {Real(1L, b), Real(2L, b)}, e, ""};
    CHECK_THROWS_AS(height(bad), domain_error);
    // additivity through the mean
    DiffK0Class x{1, {Real(1L, b), Real(7L, b)}, r, ""}, y{1, {Real(-2L, b), Real(4L, b)}, r, ""};
    DiffK0Class xy{1, {Real(-1L, b), Real(11L, b)}, r, ""};
    CHECK(abs(height(xy) - height(x) - height(y)) < fx::tol(50));
}

TEST_CASE("scaled trivial bundle and scaling form")
{
    auto q = fx::emb(fx::rationals());
    const bits_t b = q->bits();
    CHECK(height_scaled_trivial({Real(1L, b)}, *q).is_zero());
    CHECK(abs(height_scaled_trivial({Real(4L, b)}, *q) + log(Real(2L, b))) < fx::tol(50));
    CHECK_THROWS_AS(height_scaled_trivial({Real(-1L, b)}, *q), domain_error);

    auto c = fx::emb(fx::cubic23());
    std::vector<Real> lambda{Real::from_string("0.3", b), Real::from_string("-0.7", b), Real::from_string("-0.7", b)};
    std::vector<Real> f;
    for (const auto& l : lambda)
        f.push_back(exp(l * -2));
    CHECK(abs(height_scaled_trivial(f, *c) - (lambda[0] + lambda[1] + lambda[2]) / 3) < fx::tol(50));

    for (const auto& x : scaling_alpha(3, {Real(1L, b)}, *q))
        CHECK(x.is_zero());
    Real e2 = exp(Real(2L, b));
    CHECK(abs(scaling_alpha(1, {e2}, *q)[0] + 1) < fx::tol(50));
    CHECK(abs(scaling_alpha(2, {Real(4L, b)}, *q)[0] + log(Real(4L, b))) < fx::tol(50));
}

TEST_CASE("c-hat height equals the arithmetic degree")
{
    NumberField q = fx::rationals();
    auto e = fx::emb(q);
    MetrizedLineBundle r = standard_bundle(FractionalIdeal::unit(q), e);
    CHECK(c_hat_height(r, 1, q.one()).is_zero());
    MetrizedLineBundle two = standard_bundle(FractionalIdeal::principal(q.rational(2)), e);
    CHECK(abs(c_hat_height(two, 1, q.rational(2)) + log(Real(2L, e->bits()))) < fx::tol(50));
    CHECK(abs(c_hat_height(two, 1, q.rational(-2)) - arithmetic_degree(two)) < fx::tol(50));
    CHECK_THROWS_AS(c_hat_height(two, 1, q.rational(4)), principality_error);

    NumberField c = fx::cubic23();
    auto ec = fx::emb(c);
    std::vector<Real> lambda{Real::from_string("1.5", ec->bits()), Real::from_string("0.25", ec->bits()),
                             Real::from_string("0.25", ec->bits())};
    MetrizedLineBundle tw = twist_metric(standard_bundle(FractionalIdeal::unit(c), ec), lambda);
    CHECK(abs(c_hat_height(tw, 1, c.one()) - (lambda[0] + lambda[1] + lambda[2]) / 3) < fx::tol(45));

    NumberField k = fx::sqrt_minus5();
    auto ek = fx::emb(k);
    FractionalIdeal p = FractionalIdeal::generated_by({k.rational(2), fx::el(k, "1+x")});
    MetrizedLineBundle pb = standard_bundle(p, ek);
    CHECK(abs(c_hat_height(pb, 2, k.rational(2)) - arithmetic_degree(pb)) < fx::tol(45));
    CHECK_THROWS_AS(c_hat_height(pb, 1, k.rational(2)), principality_error);
}
