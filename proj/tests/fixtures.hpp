#ifndef NRK_TEST_FIXTURES_HPP
#define NRK_TEST_FIXTURES_HPP

#include <memory>
#include <string>
#include <vector>

#include "nrk/embeddings.hpp"
#include "nrk/io.hpp"
#include "nrk/number_field.hpp"

namespace fx {

inline nrk::NumberField field(std::vector<long> poly)
{
    std::vector<mpz_class> p(poly.begin(), poly.end());
    return nrk::NumberField::create(p);
}

inline nrk::NumberField field_with_basis(std::vector<long> poly, const std::vector<std::vector<mpq_class>>& rows)
{
    std::vector<mpz_class> p(poly.begin(), poly.end());
    return nrk::NumberField::create(p, nrk::QMatrix::from_rows(rows, rows.size()));
}

inline nrk::NumberField rationals() { return field({0, 1}); }
inline nrk::NumberField gaussian() { return field({1, 0, 1}); }
inline nrk::NumberField sqrt2() { return field({-2, 0, 1}); }
inline nrk::NumberField golden() { return field({-1, -1, 1}); }
inline nrk::NumberField sqrt_minus5() { return field({5, 0, 1}); }
inline nrk::NumberField cubic23() { return field({1, -1, 0, 1}); }

/* Q[x]/(x^{n+1} - x + 1) */
inline nrk::NumberField bloch_family(int n)
{
    std::vector<long> p(n + 2, 0);
    p[0] = 1;
    p[1] = -1;
    p[n + 1] = 1;
    return field(p);
}

inline std::shared_ptr<const nrk::EmbeddingSet> emb(const nrk::NumberField& k, int digits = 50)
{
    return std::make_shared<const nrk::EmbeddingSet>(nrk::embeddings(k, digits));
}

inline nrk::FieldElement el(const nrk::NumberField& k, const std::string& expr)
{
    return nrk::io::parse_expression(k, expr);
}

/* 10^-e at working precision */
inline nrk::Real tol(long e, nrk::bits_t bits = 256) { return nrk::pow10(-e, bits); }

}  // namespace fx

#endif
