#pragma once

#include <optional>
#include <vector>

#include "qtoric/errors.hpp"
#include "qtoric/f2.hpp"
#include "qtoric/ints.hpp"

namespace qtoric {

// Small dense matrix over an exact coefficient type.
template <class C>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, C(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    C& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const C& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    std::vector<C> column(int c) const {
        std::vector<C> out(rows_);
        for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = C(1);
        return m;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (is_zero(a.at(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<C> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline ZInt det(Mat<ZInt> m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    ZInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) { p = r; break; }
            if (p == -1) return 0;
            for (int c = k; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                ZInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = v / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : ZInt(-m.at(n - 1, n - 1));
}

inline F2 det(Mat<F2> m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
    const int n = m.rows();
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int r = k; r < n; ++r)
            if (m.at(r, k) == F2(1)) { p = r; break; }
        if (p == -1) return F2(0);
        if (p != k)
            for (int c = k; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
        for (int r = 0; r < n; ++r) {
            if (r == k || m.at(r, k) == F2(0)) continue;
            for (int c = k; c < n; ++c) m.at(r, c) += m.at(k, c);
        }
    }
    return F2(1);
}

// Inverse of an invertible matrix over F2; nullopt if singular.
inline std::optional<Mat<F2>> inverse(const Mat<F2>& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
    const int n = m.rows();
    Mat<F2> a = m;
    Mat<F2> inv = Mat<F2>::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int r = k; r < n; ++r)
            if (a.at(r, k) == F2(1)) { p = r; break; }
        if (p == -1) return std::nullopt;
        if (p != k)
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(k, c), a.at(p, c));
                std::swap(inv.at(k, c), inv.at(p, c));
            }
        for (int r = 0; r < n; ++r) {
            if (r == k || a.at(r, k) == F2(0)) continue;
            for (int c = 0; c < n; ++c) {
                a.at(r, c) += a.at(k, c);
                inv.at(r, c) += inv.at(k, c);
            }
        }
    }
    return inv;
}

// Inverse of a unimodular integer matrix (det must be +-1); exact.
inline Mat<ZInt> inverse_unimodular(const Mat<ZInt>& m) {
    using Rat = boost::multiprecision::cpp_rational;
    if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
    const int n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k] != 0) { p = r; break; }
        if (p == -1) throw ValidationError("matrix is singular");
        std::swap(a[k], a[p]);
        Rat piv = a[k][k];
        for (int c = 0; c < 2 * n; ++c) a[k][c] /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == k || a[r][k] == 0) continue;
            Rat f = a[r][k];
            for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    Mat<ZInt> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& v = a[i][n + j];
            if (denominator(v) != 1)
                throw ValidationError("matrix is not unimodular: inverse is not integral");
            inv.at(i, j) = numerator(v);
        }
    return inv;
}

// Row echelon reduction over ZInt with Euclidean pivoting, followed by full
// reduction above pivots. Rows are modified in place; returns for each column
// the pivot row index (or -1). Pivots are normalized to be positive.
inline std::vector<int> row_echelon(std::vector<std::vector<ZInt>>& rows, int ncols) {
    std::vector<int> pivot_row(ncols, -1);
    int top = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < ncols && top < nrows; ++c) {
        // Euclidean elimination in column c among rows top..end.
        while (true) {
            int best = -1;
            for (int r = top; r < nrows; ++r) {
                if (rows[r][c] == 0) continue;
                if (best == -1 || abs(rows[r][c]) < abs(rows[best][c])) best = r;
            }
            if (best == -1) break;
            std::swap(rows[top], rows[best]);
            bool all_clear = true;
            for (int r = top + 1; r < nrows; ++r) {
                if (rows[r][c] == 0) continue;
                ZInt q = rows[r][c] / rows[top][c];
                if (q != 0)
                    for (int j = c; j < ncols; ++j) rows[r][j] -= q * rows[top][j];
                if (rows[r][c] != 0) all_clear = false;
            }
            if (all_clear) break;
        }
        if (rows[top][c] == 0) continue;
        if (rows[top][c] < 0)
            for (int j = c; j < ncols; ++j) rows[top][j] = -rows[top][j];
        pivot_row[c] = top;
        ++top;
    }
    // Reduce entries above each pivot (fully, since unit pivots are expected).
    for (int c = ncols - 1; c >= 0; --c) {
        int pr = pivot_row[c];
        if (pr == -1) continue;
        for (int r = 0; r < pr; ++r) {
            if (rows[r][c] == 0) continue;
            ZInt q = rows[r][c] / rows[pr][c];
            ZInt rem = rows[r][c] - q * rows[pr][c];
            if (rem != 0 && rem < 0) q -= 1;  // floor division for a canonical residue
            if (q != 0)
                for (int j = 0; j < ncols; ++j) rows[r][j] -= q * rows[pr][j];
        }
    }
    return pivot_row;
}

// F2 analogue of row_echelon (plain Gauss-Jordan).
inline std::vector<int> row_echelon(std::vector<std::vector<F2>>& rows, int ncols) {
    std::vector<int> pivot_row(ncols, -1);
    int top = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < ncols && top < nrows; ++c) {
        int p = -1;
        for (int r = top; r < nrows; ++r)
            if (rows[r][c] == F2(1)) { p = r; break; }
        if (p == -1) continue;
        std::swap(rows[top], rows[p]);
        for (int r = 0; r < nrows; ++r) {
            if (r == top || rows[r][c] == F2(0)) continue;
            for (int j = 0; j < ncols; ++j) rows[r][j] += rows[top][j];
        }
        pivot_row[c] = top;
        ++top;
    }
    return pivot_row;
}

}  // namespace qtoric
