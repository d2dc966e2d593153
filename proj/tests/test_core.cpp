#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nrk/errors.hpp"
#include "nrk/intmat.hpp"
#include "nrk/polynomial.hpp"
#include "nrk/real.hpp"
#include "oracles.hpp"

using namespace nrk;

TEST_CASE("real parsing and formatting")
{
    Real a = Real::from_string("1/3", 200);
    CHECK(abs(a * 3 - Real(1L, 200)) < fx::tol(55));
    CHECK(Real::from_string("-2.5e1", 64).to_double() == -25.0);
    CHECK_THROWS_AS(Real::from_string("1.2.3", 64), format_error);
    CHECK_THROWS_AS(Real::from_string("1/0", 64), format_error);
    CHECK(Real(0L, 64).to_string(10) == "0");
    CHECK(Real(1L, 200).to_string(5) == "1");
}

TEST_CASE("complex literals")
{
    Complex z = parse_complex("0.5-2i", 128);
    CHECK(z.re.to_double() == 0.5);
    CHECK(z.im.to_double() == -2.0);
    CHECK(parse_complex("i", 64).im.to_double() == 1.0);
    CHECK(parse_complex("-i", 64).im.to_double() == -1.0);
    CHECK(parse_complex("1/2+1/3i", 64).im.to_double() == doctest::Approx(1.0 / 3));
    CHECK(parse_complex("3", 64).is_real());
    CHECK(parse_complex("1e-3+2e+1i", 64).im.to_double() == 20.0);
    CHECK_THROWS_AS(parse_complex("", 64), format_error);
    CHECK_THROWS_AS(parse_complex("1+zi", 64), format_error);
}

TEST_CASE("conjugation is exact under arithmetic")
{
    Complex z = parse_complex("0.3+0.7i", 200);
    Complex w = parse_complex("-1.1+0.2i", 200);
    Complex a = z * w / (z + w), b = conj(z) * conj(w) / (conj(z) + conj(w));
    CHECK(a.re == b.re);
    CHECK(a.im == -b.im);
}

TEST_CASE("polynomial arithmetic")
{
    QPoly a = QPoly::from_integers({-1, 0, 1});  // x^2 - 1
    QPoly b = QPoly::from_integers({1, 1});      // x + 1
    auto d = divmod(a, b);
    CHECK(d.quotient == QPoly::from_integers({-1, 1}));
    CHECK(d.remainder.is_zero());
    CHECK(gcd(a, b) == b);
    auto x = xgcd(QPoly::from_integers({1, 0, 1}), QPoly::from_integers({0, 1}));
    CHECK(x.g == QPoly::from_integers({1}));
    CHECK(x.s * QPoly::from_integers({1, 0, 1}) + x.t * QPoly::from_integers({0, 1}) == x.g);
}

TEST_CASE("resultant agrees with the product over roots")
{
    // monic f: Res(f, g) = prod over roots a of f of g(a)
    QPoly f = QPoly::from_integers({-2, 0, 1});
    CHECK(resultant(f, QPoly::from_integers({-3, 1})) == 7);   // (s-3)(-s-3)
    CHECK(resultant(f, QPoly::from_integers({1, 1})) == -1);   // (s+1)(1-s)
    CHECK(resultant(f, QPoly::from_integers({5})) == 25);
    QPoly g = QPoly::from_integers({1, -1, 0, 1});
    CHECK(resultant(g, QPoly::from_integers({0, 1})) == -1);   // -c0 in odd degree
}

TEST_CASE("hermite form is canonical and transform is unimodular")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> u(-9, 9);
    for (int t = 0; t < 30; ++t) {
        IntMatrix a(4, 3);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 3; ++j)
                a(i, j) = u(rng);
        HermiteForm h = hermite_form(a);
        IntMatrix ta = h.transform * a;
        for (size_t i = 0; i < h.rank; ++i)
            CHECK(ta.row(i) == h.basis.row(i));
        for (size_t i = h.rank; i < 4; ++i)
            for (const auto& x : ta.row(i))
                CHECK(x == 0);
        CHECK(abs(determinant(to_rational(h.transform))) == 1);
        // same lattice after a unimodular change gives the same HNF
        IntMatrix b = a;
        b.add_row(0, 1, 3);
        b.swap_rows(2, 3);
        b.negate_row(1);
        CHECK(hermite_form(b).basis == h.basis);
    }
}

TEST_CASE("smith form matches determinantal divisors")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> u(-6, 6);
    for (int t = 0; t < 40; ++t) {
        size_t m = 2 + t % 3, n = 2 + (t / 3) % 3;
        IntMatrix a(m, n);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j)
                a(i, j) = u(rng);
        SmithForm s = smith_form(a);
        IntMatrix d = s.left * a * s.right;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j)
                CHECK(d(i, j) == (i == j ? s.diagonal[i] : mpz_class(0)));
        std::vector<mpz_class> expect = oracle::invariant_factors_by_minors(a);
        for (size_t i = 0; i < expect.size(); ++i)
            CHECK(s.diagonal[i] == expect[i]);
        for (size_t i = expect.size(); i < s.diagonal.size(); ++i)
            CHECK(s.diagonal[i] == 0);
    }
}

TEST_CASE("left kernel and lattice membership")
{
    IntMatrix a = IntMatrix::from_rows({{1, 2}, {2, 4}, {0, 1}}, 2);
    IntMatrix k = left_kernel(a);
    REQUIRE(k.rows() == 1);
    CHECK(mul(k.row(0), a) == IntVector{0, 0});
    CHECK(in_row_lattice(k, IntVector{-4, 2, 0}));
    CHECK_FALSE(in_row_lattice(k, IntVector{1, 0, 0}));
}

TEST_CASE("lll finds a short vector")
{
    IntMatrix b = IntMatrix::from_rows({{1, 0, 0, 10000}, {0, 1, 0, 14142}, {0, 0, 1, 17320}}, 4);
    IntMatrix r = lll_reduce(b);
    CHECK(hermite_form(r).basis == hermite_form(b).basis);
    mpz_class first = 0;
    for (const auto& x : r.row(0))
        first += x * x;
    CHECK(first < mpz_class(10000) * 10000);
}

TEST_CASE("rational inverse and singular input")
{
    QMatrix m = QMatrix::from_rows({{2, 1}, {1, 1}}, 2);
    QMatrix i = inverse(m);
    CHECK(m * i == QMatrix::identity(2));
    CHECK_THROWS_AS(inverse(QMatrix::from_rows({{1, 2}, {2, 4}}, 2)), arithmetic_error);
}
