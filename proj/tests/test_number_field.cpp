#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nrk/embeddings.hpp"
#include "nrk/errors.hpp"
#include "nrk/io.hpp"
#include "nrk/number_field.hpp"

using namespace nrk;

namespace {

FieldElement random_element(const NumberField& k, std::mt19937_64& rng, int range = 5)
{
    std::uniform_int_distribution<int> u(-range, range);
    std::vector<mpq_class> c;
    for (int i = 0; i < k.degree(); ++i)
        c.emplace_back(u(rng));
    return k.element(c);
}

}  // namespace

TEST_CASE("field records")
{
    CHECK(io::parse_field(io::json::parse(R"({"poly":[1,0,1]})")).degree() == 2);
    CHECK(io::parse_field(io::json::parse(R"({"poly":[1,-1,0,1]})")).degree() == 3);
    CHECK_THROWS_AS(io::parse_field(io::json::parse(R"({"poly":[2,0,2]})")), format_error);
    CHECK_THROWS_AS(io::parse_field(io::json::parse(R"({"poly":[1]})")), format_error);
    CHECK_THROWS_AS(io::parse_field(io::json::parse(R"({"poly":[1,"1/2",1]})")), format_error);
    CHECK_THROWS_AS(io::parse_field(io::json::parse(R"({"poly":[-1,0,1]})")), format_error);  // x = 1 is a root
    NumberField q5 = io::parse_field(io::json::parse(R"({"poly":[-5,0,1],"integral_basis":[["1","0"],["1/2","1/2"]]})"));
    CHECK(is_unit(q5.element({mpq_class(1, 2), mpq_class(1, 2)})));
    CHECK_THROWS_AS(io::parse_field(io::json::parse(R"({"poly":[-5,0,1],"integral_basis":[["1/2","0"],["0","1"]]})")),
                    format_error);
}

TEST_CASE("quotient ring arithmetic")
{
    NumberField g = fx::gaussian();
    CHECK(g.generator() * g.generator() == g.rational(-1));
    NumberField s = fx::sqrt2();
    CHECK(fx::el(s, "1+x") * fx::el(s, "-1+x") == s.one());
    NumberField c = fx::cubic23();
    CHECK(c.generator().pow(3) == fx::el(c, "x - 1"));
    CHECK(arith(c.generator(), c.one(), ArithOp::sub) == fx::el(c, "x-1"));
    CHECK_THROWS_AS(arith(c.one(), c.zero(), ArithOp::div), arithmetic_error);
    CHECK(c.generator().pow(-1) * c.generator() == c.one());
}

TEST_CASE("norms and units")
{
    NumberField g = fx::gaussian();
    CHECK(norm(g.generator()) == 1);
    NumberField c = fx::cubic23();
    CHECK(norm(c.generator()) == -1);           // (-1)^3 f(0)
    CHECK(norm(c.one() - c.generator()) == 1);  // f(1)
    CHECK(is_in_Rcirc(c.generator()));
    CHECK_FALSE(is_unit(fx::rationals().rational(2)));
    NumberField phi = fx::golden();
    CHECK(norm(phi.generator()) == -1);
    CHECK(norm(phi.one() - phi.generator()) == -1);
    CHECK(is_in_Rcirc(phi.generator()));
    CHECK_FALSE(is_unit(fx::el(g, "1/2")));
}

TEST_CASE("norm is multiplicative and units are closed")
{
    std::mt19937_64 rng(3);
    for (const auto& k : {fx::gaussian(), fx::sqrt2(), fx::golden(), fx::cubic23(), fx::bloch_family(4)}) {
        for (int t = 0; t < 100; ++t) {
            FieldElement a = random_element(k, rng), b = random_element(k, rng);
            CHECK(norm(a * b) == norm(a) * norm(b));
        }
        FieldElement u = k.generator(), v = k.one() - k.generator();
        if (is_unit(u) && is_unit(v)) {
            CHECK(is_unit(u * v));
            CHECK(is_unit(u.inverse()));
        }
    }
}

TEST_CASE("embeddings of small fields")
{
    auto e = embeddings(fx::sqrt2(), 50);
    CHECK(e.signature() == std::pair<int, int>{2, 0});
    CHECK(abs(e.root(1).re - sqrt(Real(2L, e.bits()))) < fx::tol(50));
    CHECK(e.root(0).re.sign() < 0);

    auto g = embeddings(fx::gaussian(), 50);
    CHECK(g.signature() == std::pair<int, int>{0, 1});
    CHECK(g.root(0).im.sign() < 0);
    CHECK(g.root(0).re.is_zero());
    CHECK(g.conjugate(0) == 1);

    auto c = embeddings(fx::cubic23(), 50);
    CHECK(c.signature() == std::pair<int, int>{1, 1});
    CHECK(c.root(0).im.is_zero());
    // real root by bisection on f(t) = t^3 - t + 1
    Real lo(-2L, 300), hi(-1L, 300);
    for (int i = 0; i < 250; ++i) {
        Real mid = (lo + hi) / 2;
        Real f = mid * mid * mid - mid + 1;
        (f.sign() < 0 ? lo : hi) = mid;
    }
    CHECK(abs(c.root(0).re - lo) < fx::tol(50));
    CHECK(c.root(1).re == c.root(2).re);
    CHECK(c.root(1).im == -c.root(2).im);
}

TEST_CASE("embedding preconditions")
{
    CHECK_THROWS_AS(embeddings(fx::gaussian(), 15), domain_error);
    NumberField sq = NumberField::create({1, 0, 2, 0, 1});  // (x^2+1)^2
    CHECK_THROWS_AS(embeddings(sq, 30), squarefree_error);
}

TEST_CASE("evaluation is conjugation equivariant and matches the norm")
{
    std::mt19937_64 rng(5);
    for (const auto& k : {fx::gaussian(), fx::cubic23(), fx::bloch_family(5), fx::field({3, 1, 0, 0, 1})}) {
        auto e = embeddings(k, 50);
        for (int t = 0; t < 20; ++t) {
            FieldElement a = random_element(k, rng);
            Complex prod(Real(1L, e.bits()));
            for (size_t i = 0; i < e.size(); ++i) {
                Complex v = evaluate(a, e, i), w = evaluate(a, e, e.conjugate(i));
                CHECK(v.re == w.re);
                CHECK(v.im == -w.im);
                prod = prod * v;
            }
            Real n(norm(a), e.bits());
            CHECK(abs(prod.re - n) < fx::tol(40) * (abs(n) + 1));
            CHECK(abs(prod.im) < fx::tol(40) * (abs(n) + 1));
        }
        CHECK(evaluate(k.rational(3), e, 0).re == Real(3L, e.bits()));
    }
}

TEST_CASE("embedding order is deterministic")
{
    auto a = embeddings(fx::bloch_family(5), 60), b = embeddings(fx::bloch_family(5), 60);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a.root(i).re == b.root(i).re);
        CHECK(a.root(i).im == b.root(i).im);
        CHECK(a.conjugate(a.conjugate(i)) == i);
    }
    auto [r1, r2] = a.signature();
    CHECK(r1 + 2 * r2 == 6);
}
