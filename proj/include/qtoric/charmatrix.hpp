#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtoric/matrix.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

enum class Ring { Int, Mod2 };

inline std::string ring_name(Ring r) { return r == Ring::Int ? "INT" : "MOD2"; }

// Characteristic matrix: one column per facet of the bound polytope, in the
// polytope's facet order. Over Mod2 the entries are restricted to {0,1}.
class CharMatrix {
public:
    CharMatrix(SimplexProduct polytope, Ring ring, Mat<ZInt> entries)
        : polytope_(std::move(polytope)), ring_(ring), entries_(std::move(entries)) {
        if (entries_.rows() != polytope_.n() || entries_.cols() != polytope_.m())
            throw ShapeError("characteristic matrix must be n x m for the bound polytope");
        if (ring_ == Ring::Mod2)
            for (int i = 0; i < entries_.rows(); ++i)
                for (int j = 0; j < entries_.cols(); ++j)
                    if (entries_.at(i, j) != 0 && entries_.at(i, j) != 1)
                        throw RingError("Mod2 matrix entries must be 0 or 1");
    }

    const SimplexProduct& polytope() const { return polytope_; }
    Ring ring() const { return ring_; }
    int rows() const { return entries_.rows(); }
    int cols() const { return entries_.cols(); }
    const ZInt& at(int i, int j) const { return entries_.at(i, j); }
    const Mat<ZInt>& entries() const { return entries_; }

    // The n x n submatrix of columns at a vertex, in facet order.
    Mat<ZInt> columns_at(const Vertex& v) const {
        auto facets = polytope_.facets_at(v);
        Mat<ZInt> sub(rows(), static_cast<int>(facets.size()));
        for (std::size_t c = 0; c < facets.size(); ++c) {
            int j = polytope_.facet_index(facets[c]);
            for (int i = 0; i < rows(); ++i) sub.at(i, static_cast<int>(c)) = entries_.at(i, j);
        }
        return sub;
    }

    Mat<F2> columns_at_mod2(const Vertex& v) const {
        auto sub = columns_at(v);
        Mat<F2> out(sub.rows(), sub.cols());
        for (int i = 0; i < sub.rows(); ++i)
            for (int j = 0; j < sub.cols(); ++j) out.at(i, j) = F2(sub.at(i, j));
        return out;
    }

    friend bool operator==(const CharMatrix& a, const CharMatrix& b) {
        return a.polytope_ == b.polytope_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
    }

private:
    SimplexProduct polytope_;
    Ring ring_;
    Mat<ZInt> entries_;
};

struct ValidationReport {
    bool valid = false;
    std::optional<Vertex> failing_vertex;
    std::optional<ZInt> determinant;  // at the failing vertex
};

// A matrix is valid iff the columns at every vertex form a basis:
// determinant +-1 over INT, nonzero over MOD2.
inline ValidationReport validate(const CharMatrix& lambda) {
    for (const auto& v : lambda.polytope().vertices()) {
        if (lambda.ring() == Ring::Int) {
            ZInt d = det(lambda.columns_at(v));
            if (d != 1 && d != -1) return {false, v, d};
        } else {
            F2 d = det(lambda.columns_at_mod2(v));
            if (d == F2(0)) return {false, v, ZInt(0)};
        }
    }
    return {true, std::nullopt, std::nullopt};
}

inline bool is_valid(const CharMatrix& lambda) { return validate(lambda).valid; }

// Every column sums to exactly 1 (the special/SU condition for INT matrices).
inline bool is_special(const CharMatrix& lambda) {
    if (lambda.ring() != Ring::Int)
        throw RingError("is_special is defined for INT matrices only");
    for (int j = 0; j < lambda.cols(); ++j) {
        ZInt s = 0;
        for (int i = 0; i < lambda.rows(); ++i) s += lambda.at(i, j);
        if (s != 1) return false;
    }
    return true;
}

// Entrywise mod-2 reduction. Validity is preserved: +-1 determinants are odd.
inline CharMatrix mod2_reduce(const CharMatrix& lambda) {
    Mat<ZInt> e(lambda.rows(), lambda.cols());
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.cols(); ++j)
            e.at(i, j) = ((lambda.at(i, j) % 2) + 2) % 2;
    return CharMatrix(lambda.polytope(), Ring::Mod2, std::move(e));
}

// True iff g * a == b for some invertible g over F2. Since the columns of a
// at any vertex form a basis, g is unique if it exists: solve on the base
// vertex and verify on every column.
inline bool equivalent_mod2(const CharMatrix& a, const CharMatrix& b) {
    if (a.ring() != Ring::Mod2 || b.ring() != Ring::Mod2)
        throw RingError("equivalent_mod2 requires MOD2 matrices");
    if (a.polytope() != b.polytope())
        throw ShapeError("equivalent_mod2 requires matrices on the same polytope");
    Vertex v0 = a.polytope().base_vertex();
    auto av = a.columns_at_mod2(v0);
    auto bv = b.columns_at_mod2(v0);
    auto av_inv = inverse(av);
    if (!av_inv) throw ValidationError("equivalent_mod2: left matrix is invalid at the base vertex");
    Mat<F2> g = bv * (*av_inv);
    if (!inverse(g)) return false;
    // Check g * a == b entrywise.
    const int n = a.rows();
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < n; ++i) {
            F2 s(0);
            for (int k = 0; k < n; ++k) s += g.at(i, k) * F2(a.at(k, j));
            if (s != F2(b.at(i, j))) return false;
        }
    return true;
}

namespace detail {

// Column vector with entries +1 at odd (1-based) positions and -1 at even
// positions, written into rows [row0, row0+len) of column col.
inline void put_alternating(Mat<ZInt>& m, int row0, int len, int col) {
    for (int i = 0; i < len; ++i) m.at(row0 + i, col) = (i % 2 == 0) ? 1 : -1;
}

inline void put_identity(Mat<ZInt>& m, int row0, int col0, int size) {
    for (int i = 0; i < size; ++i) m.at(row0 + i, col0 + i) = 1;
}

}  // namespace detail

// The two block families of special matrices, and the three sporadic cases.
// Entries reproduce the displayed matrices exactly.

// On Delta^2 x Delta^{4l+3}: [ I_2  1~_2  0        0          ]
//                            [ 0    J_1   I_{4l+3} 1~_{4l+3}  ]
inline CharMatrix lambda2_stong_type_a(int l) {
    if (l < 0) throw ParseError("family parameter l must be >= 0");
    const int q = 4 * l + 3;
    SimplexProduct P({2, q});
    Mat<ZInt> e(P.n(), P.m());
    detail::put_identity(e, 0, 0, 2);
    detail::put_alternating(e, 0, 2, 2);
    e.at(2, 2) = 1;  // J_1
    detail::put_identity(e, 2, 3, q);
    detail::put_alternating(e, 2, q, 3 + q);
    return CharMatrix(std::move(P), Ring::Int, std::move(e));
}

// On Delta^4 x Delta^2 x Delta^{8l+5}:
// [ I_4  1~_4  0    0     0         0         ]
// [ 0    0     I_2  1~_2  0         0         ]
// [ 0    J_1   0    J_2   I_{8l+5}  1~_{8l+5} ]
inline CharMatrix lambda2_stong_type_b(int l) {
    if (l < 0) throw ParseError("family parameter l must be >= 0");
    const int q = 8 * l + 5;
    SimplexProduct P({4, 2, q});
    Mat<ZInt> e(P.n(), P.m());
    detail::put_identity(e, 0, 0, 4);
    detail::put_alternating(e, 0, 4, 4);
    e.at(6, 4) = 1;  // J_1
    detail::put_identity(e, 4, 5, 2);
    detail::put_alternating(e, 4, 2, 7);
    e.at(7, 7) = 1;  // J_2
    detail::put_identity(e, 6, 8, q);
    detail::put_alternating(e, 6, q, 8 + q);
    return CharMatrix(std::move(P), Ring::Int, std::move(e));
}

// On Delta^4 x Delta^3 (dimension 7).
inline CharMatrix lambda2_n7() {
    SimplexProduct P({4, 3});
    Mat<ZInt> e(7, 9);
    detail::put_identity(e, 0, 0, 4);
    detail::put_alternating(e, 0, 5, 4);  // column 5: (1,-1,1,-1,1)
    detail::put_identity(e, 4, 5, 3);
    detail::put_alternating(e, 4, 3, 8);  // column 9: (1,-1,1) in rows 5..7
    return CharMatrix(std::move(P), Ring::Int, std::move(e));
}

// On Delta^3 x Delta^5 (dimension 8).
inline CharMatrix lambda2_n8() {
    SimplexProduct P({3, 5});
    Mat<ZInt> e(8, 10);
    detail::put_identity(e, 0, 0, 3);
    detail::put_alternating(e, 0, 5, 3);  // column 4: (1,-1,1,-1,1)
    detail::put_identity(e, 3, 4, 5);
    detail::put_alternating(e, 3, 5, 9);  // column 10: (1,-1,1,-1,1) in rows 4..8
    return CharMatrix(std::move(P), Ring::Int, std::move(e));
}

// On Delta^3 x Delta^9 (dimension 12).
inline CharMatrix lambda2_n12() {
    SimplexProduct P({3, 9});
    Mat<ZInt> e(12, 14);
    detail::put_identity(e, 0, 0, 3);
    detail::put_alternating(e, 0, 5, 3);  // column 4: (1,-1,1,-1,1)
    detail::put_identity(e, 3, 4, 9);
    detail::put_alternating(e, 3, 9, 13);  // column 14: alternating in rows 4..12
    return CharMatrix(std::move(P), Ring::Int, std::move(e));
}

// Text format: first line "n m RING", then n rows of m integers.
// The facet ordering is implied by the bound polytope.
inline std::string to_text(const CharMatrix& lambda) {
    std::ostringstream os;
    os << lambda.rows() << ' ' << lambda.cols() << ' ' << ring_name(lambda.ring()) << '\n';
    for (int i = 0; i < lambda.rows(); ++i) {
        for (int j = 0; j < lambda.cols(); ++j) {
            if (j) os << ' ';
            os << lambda.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

inline CharMatrix char_matrix_from_stream(std::istream& in, const SimplexProduct& P) {
    int n = 0, m = 0;
    std::string ring_tag;
    if (!(in >> n >> m >> ring_tag)) throw ParseError("matrix file: bad header line");
    Ring ring;
    if (ring_tag == "INT") ring = Ring::Int;
    else if (ring_tag == "MOD2") ring = Ring::Mod2;
    else throw ParseError("matrix file: unknown ring '" + ring_tag + "'");
    if (n != P.n() || m != P.m())
        throw ShapeError("matrix file header does not match the polytope");
    Mat<ZInt> e(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("matrix file: missing entries");
            try {
                e.at(i, j) = ZInt(tok);
            } catch (const std::exception&) {
                throw ParseError("matrix file: bad integer '" + tok + "'");
            }
        }
    return CharMatrix(P, ring, std::move(e));
}

inline CharMatrix char_matrix_from_text(const std::string& text, const SimplexProduct& P) {
    std::istringstream is(text);
    return char_matrix_from_stream(is, P);
}

}  // namespace qtoric
