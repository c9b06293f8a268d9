#include <painleve/matrix.hpp>

namespace painleve {

SingularSolve gauss_solve(const QuadMatrix& x, const std::vector<Poly>& rhs) {
    size_t n = x.rows();
    size_t m = x.cols();
    if (rhs.size() != n) throw std::domain_error("gauss_solve: rhs size mismatch");

    QuadMatrix a = x;
    std::vector<Poly> b = rhs;
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t p = row;
        while (p < n && a.at(p, col).is_zero()) ++p;
        if (p == n) continue;
        if (p != row) {
            for (size_t c = 0; c < m; ++c) std::swap(a.at(p, c), a.at(row, c));
            std::swap(b[p], b[row]);
        }
        QuadElem inv = a.at(row, col).inverse();
        for (size_t c = col; c < m; ++c) a.at(row, c) = a.at(row, c) * inv;
        b[row] = b[row].scaled(inv);
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            QuadElem f = a.at(i, col);
            for (size_t c = col; c < m; ++c) a.at(i, c) = a.at(i, c) - f * a.at(row, c);
            b[i] = b[i] - b[row].scaled(f);
        }
        pivot_col.push_back(col);
        ++row;
    }

    SingularSolve out;
    out.rank = row;
    out.compatible = true;
    for (size_t i = row; i < n; ++i)
        if (!b[i].is_zero()) out.compatible = false;

    // Kernel basis: one vector per free column.
    std::vector<bool> is_pivot(m, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t fc = 0; fc < m; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<QuadElem> k(m, QuadElem(0));
        k[fc] = QuadElem(1);
        for (size_t r = 0; r < pivot_col.size(); ++r) k[pivot_col[r]] = -a.at(r, fc);
        out.kernel.push_back(std::move(k));
    }

    if (out.compatible) {
        out.particular.assign(m, Poly());
        for (size_t r = 0; r < pivot_col.size(); ++r) out.particular[pivot_col[r]] = b[r];
    }
    return out;
}

std::vector<Poly> cramer_solve(const PolyMatrix& x, const std::vector<Poly>& rhs,
                               const QuadElem& det) {
    size_t n = x.rows();
    if (det.is_zero()) throw std::domain_error("cramer_solve: singular matrix");
    std::vector<Poly> out(n);
    for (size_t j = 0; j < n; ++j) {
        PolyMatrix rep = x;
        for (size_t i = 0; i < n; ++i) rep.at(i, j) = rhs[i];
        out[j] = cofactor_det(rep).divided(det);
    }
    return out;
}

}  // namespace painleve
