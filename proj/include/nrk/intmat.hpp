#ifndef NRK_INTMAT_HPP
#define NRK_INTMAT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace nrk {

/* Row-major dense matrix. */
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(size_t n)
    {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(size_t i) const
    {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void append_row(const std::vector<T>& r)
    {
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(size_t a, size_t b)
    {
        if (a == b)
            return;
        for (size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(size_t a, size_t b)
    {
        if (a == b)
            return;
        for (size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    /* row a += c * row b */
    void add_row(size_t a, size_t b, const T& c)
    {
        for (size_t j = 0; j < cols_; ++j)
            (*this)(a, j) += c * (*this)(b, j);
    }

    void add_col(size_t a, size_t b, const T& c)
    {
        for (size_t i = 0; i < rows_; ++i)
            (*this)(i, a) += c * (*this)(i, b);
    }

    void negate_row(size_t a)
    {
        for (size_t j = 0; j < cols_; ++j)
            (*this)(a, j) = -(*this)(a, j);
    }

    void negate_col(size_t a)
    {
        for (size_t i = 0; i < rows_; ++i)
            (*this)(i, a) = -(*this)(i, a);
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using QMatrix = Matrix<mpq_class>;
using IntVector = std::vector<mpz_class>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (size_t j = 0; j < b.cols(); ++j)
                r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

/* row vector times matrix */
IntVector mul(const IntVector& v, const IntMatrix& m);
QMatrix to_rational(const IntMatrix& m);

struct HermiteForm {
    IntMatrix basis;      // nonzero rows of the HNF, canonical
    IntMatrix transform;  // unimodular T with T * A = [basis; 0]
    size_t rank = 0;
};

/* Row-style Hermite normal form: pivots positive, strictly increasing
 * columns, entries above a pivot reduced into [0, pivot). */
HermiteForm hermite_form(const IntMatrix& a);

struct SmithForm {
    std::vector<mpz_class> diagonal;  // length cols; d_i | d_{i+1}, d_i >= 0
    IntMatrix left;                   // U, unimodular, rows x rows
    IntMatrix right;                  // V, unimodular, cols x cols; U * A * V = D
};

SmithForm smith_form(const IntMatrix& a);

/* Canonical representative of v modulo the row lattice of an HNF basis. */
IntVector reduce_by_hnf(const IntMatrix& hnf, IntVector v);
bool in_row_lattice(const IntMatrix& hnf, const IntVector& v);

/* HNF basis of { v in Z^rows : v * A = 0 }. */
IntMatrix left_kernel(const IntMatrix& a);

/* LLL-reduces the rows of a basis of full row rank, exact rational
 * Gram-Schmidt, Lovasz parameter delta. */
IntMatrix lll_reduce(const IntMatrix& basis, const mpq_class& delta = mpq_class(3, 4));

mpq_class determinant(QMatrix m);
/* throws arithmetic_error if singular */
QMatrix inverse(const QMatrix& m);

/* Integer inverse of a unimodular matrix. */
IntMatrix unimodular_inverse(const IntMatrix& m);

/* Canonical Z-basis (HNF) of the row lattice of a full-rank rational matrix. */
QMatrix rational_hermite_form(const QMatrix& m);

}  // namespace nrk

#endif
