#pragma once

// Small exact matrices over Q(sqrt(d)) or over parameter polynomials.
//
// Everything here is fraction-free or field-exact; there is no pivoting by
// magnitude, only by nonzeroness. Sizes are tiny (system dimension <= 3 in
// practice), so cofactor expansions are fine where they are clearest.

#include <painleve/parampoly.hpp>

#include <vector>

namespace painleve {

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

using QuadMatrix = Matrix<QuadElem>;
using PolyMatrix = Matrix<Poly>;

inline bool entry_is_zero(const QuadElem& v) { return v.is_zero(); }
inline bool entry_is_zero(const Poly& v) { return v.is_zero(); }
inline QuadElem entry_divide(const QuadElem& a, const QuadElem& b) { return a / b; }
inline Poly entry_divide(const Poly& a, const Poly& b) { return a.exact_divide(b); }

// Determinant by cofactor expansion along the first row.
template <typename T>
T cofactor_det(const Matrix<T>& m) {
    size_t n = m.rows();
    if (n != m.cols()) throw std::domain_error("cofactor_det: not square");
    if (n == 0) return T(1);
    if (n == 1) return m.at(0, 0);
    T acc = T(0);
    for (size_t j = 0; j < n; ++j) {
        if (entry_is_zero(m.at(0, j))) continue;
        Matrix<T> minor(n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        T term = m.at(0, j) * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Rank by fraction-free (Bareiss) elimination; for polynomial entries this
// is the generic rank over the parameter field.
template <typename T>
size_t bareiss_rank(Matrix<T> m) {
    size_t rank = 0;
    T prev = T(1);
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pivot = row;
        while (pivot < m.rows() && entry_is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        for (size_t i = row + 1; i < m.rows(); ++i) {
            for (size_t c = col + 1; c < m.cols(); ++c) {
                m.at(i, c) = entry_divide(m.at(i, c) * m.at(row, col) - m.at(i, col) * m.at(row, c),
                                          prev);
            }
            m.at(i, col) = T(0);
        }
        prev = m.at(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

// Characteristic polynomial det(nu*I - M) by Faddeev-LeVerrier; returns
// coefficients c[0..n] with c[n] = 1, i.e. sum c[k] nu^k.
template <typename T>
std::vector<T> char_poly(const Matrix<T>& m) {
    size_t n = m.rows();
    if (n != m.cols()) throw std::domain_error("char_poly: not square");
    std::vector<T> coeff(n + 1, T(0));
    coeff[n] = T(1);
    Matrix<T> acc = Matrix<T>::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        // acc <- M * acc
        Matrix<T> next(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                T s = T(0);
                for (size_t l = 0; l < n; ++l) s = s + m.at(i, l) * acc.at(l, j);
                next.at(i, j) = s;
            }
        acc = next;
        T tr = T(0);
        for (size_t i = 0; i < n; ++i) tr = tr + acc.at(i, i);
        T ck = entry_divide(-tr, T((long long)k));
        coeff[n - k] = ck;
        for (size_t i = 0; i < n; ++i) acc.at(i, i) = acc.at(i, i) + ck;
    }
    return coeff;
}

struct SingularSolve {
    bool compatible = false;
    size_t rank = 0;
    std::vector<Poly> particular;            // one solution, when compatible
    std::vector<std::vector<QuadElem>> kernel;  // basis of ker X
};

// Gauss-Jordan over the field for X u = rhs with X possibly singular and a
// polynomial right-hand side. Compatibility here is identical-in-parameters:
// eliminated rows must reduce the rhs to the zero polynomial.
SingularSolve gauss_solve(const QuadMatrix& x, const std::vector<Poly>& rhs);

// Unique solve for X u = rhs when det(X) is a nonzero constant but X itself
// may carry parameter symbols (Cramer's rule with polynomial cofactors).
std::vector<Poly> cramer_solve(const PolyMatrix& x, const std::vector<Poly>& rhs,
                               const QuadElem& det);

}  // namespace painleve
