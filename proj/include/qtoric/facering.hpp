#pragma once

#include <map>
#include <vector>

#include "qtoric/charmatrix.hpp"
#include "qtoric/presentation.hpp"

namespace qtoric {

namespace detail {

template <class C>
C from_zint(const ZInt& v);

template <>
inline ZInt from_zint<ZInt>(const ZInt& v) { return v; }

template <>
inline F2 from_zint<F2>(const ZInt& v) { return F2(v); }

template <class C>
inline Mat<C> vertex_columns(const CharMatrix& lambda, const Vertex& v) {
    auto sub = lambda.columns_at(v);
    Mat<C> out(sub.rows(), sub.cols());
    for (int i = 0; i < sub.rows(); ++i)
        for (int j = 0; j < sub.cols(); ++j) out.at(i, j) = from_zint<C>(sub.at(i, j));
    return out;
}

template <class C>
Mat<C> invert_basis(const Mat<C>& b);

template <>
inline Mat<ZInt> invert_basis<ZInt>(const Mat<ZInt>& b) { return inverse_unimodular(b); }

template <>
inline Mat<F2> invert_basis<F2>(const Mat<F2>& b) {
    auto inv = inverse(b);
    if (!inv) throw ValidationError("vertex submatrix is singular over F2");
    return *inv;
}

template <class C>
inline void check_ring(const CharMatrix& lambda) {
    if constexpr (std::is_same_v<C, ZInt>) {
        if (lambda.ring() != Ring::Int) throw RingError("expected an INT characteristic matrix");
    } else {
        if (lambda.ring() != Ring::Mod2) throw RingError("expected a MOD2 characteristic matrix");
    }
}

}  // namespace detail

// Davis-Januszkiewicz cohomology presentation after eliminating the linear
// relations: one retained variable per simplex factor (the class of the
// factor's last facet) and one relation per factor, the substituted product
// of all of the factor's facet classes.
template <class C>
class QuotientPresentation {
public:
    QuotientPresentation(SimplexProduct polytope, Presentation<C> pres,
                         std::vector<Poly<C>> substitution)
        : polytope_(std::move(polytope)), pres_(std::move(pres)), subs_(std::move(substitution)) {}

    const SimplexProduct& polytope() const { return polytope_; }
    const Presentation<C>& presentation() const { return pres_; }

    int nvars() const { return pres_.nvars(); }
    const std::vector<std::string>& var_names() const { return pres_.var_names(); }
    const std::vector<Poly<C>>& relations() const { return pres_.relations(); }

    // Degree-1 class of a facet, expressed in retained variables.
    const Poly<C>& facet_class(const FacetId& f) const {
        return subs_[polytope_.facet_index(f)];
    }
    const Poly<C>& facet_class(int facet_index) const { return subs_[facet_index]; }

    Poly<C> normal_form(const Poly<C>& p) const { return pres_.normal_form(p); }
    Mono top_standard_monomial() const { return pres_.top_monomial(); }

private:
    SimplexProduct polytope_;
    Presentation<C> pres_;
    std::vector<Poly<C>> subs_;  // by facet index; retained facets map to themselves
};

// Builds the quotient presentation for a valid characteristic matrix. The
// n x n submatrix on the facets of the base vertex (everything except the
// last facet of each factor) is inverted exactly over the coefficient ring
// to express each eliminated facet class in the retained variables.
template <class C>
QuotientPresentation<C> eliminate(const SimplexProduct& P, const CharMatrix& lambda) {
    detail::check_ring<C>(lambda);
    if (lambda.polytope() != P)
        throw ShapeError("eliminate: matrix is bound to a different polytope");
    const int n = P.n();
    const int r = P.factor_count();

    Vertex v0 = P.base_vertex();
    Mat<C> basis = detail::vertex_columns<C>(lambda, v0);
    Mat<C> basis_inv = detail::invert_basis<C>(basis);

    // Retained columns: the last facet of each factor.
    Mat<C> free_cols(n, r);
    for (int t = 0; t < r; ++t) {
        int j = P.facet_index({t, P.factor_dim(t)});
        for (int i = 0; i < n; ++i) free_cols.at(i, t) = detail::from_zint<C>(lambda.at(i, j));
    }
    // Coefficients of the eliminated facet classes: -basis^{-1} * free_cols,
    // row per eliminated facet (in facet order at the base vertex).
    Mat<C> coeffs = basis_inv * free_cols;

    std::vector<Poly<C>> subs(P.m(), Poly<C>(r));
    auto elim_facets = P.facets_at(v0);
    for (std::size_t row = 0; row < elim_facets.size(); ++row) {
        Poly<C> form(r);
        for (int t = 0; t < r; ++t) {
            Mono m(r, 0);
            m[t] = 1;
            form.add_term(std::move(m), -coeffs.at(static_cast<int>(row), t));
        }
        subs[P.facet_index(elim_facets[row])] = form;
    }
    for (int t = 0; t < r; ++t)
        subs[P.facet_index({t, P.factor_dim(t)})] = Poly<C>::variable(r, t);

    // One relation per factor: the substituted product of its facet classes.
    std::vector<Poly<C>> relations;
    std::vector<int> caps;
    for (int t = 0; t < r; ++t) {
        caps.push_back(P.factor_dim(t));
        Poly<C> rel = Poly<C>::constant(r, C(1));
        for (int j = 0; j <= P.factor_dim(t); ++j) rel *= subs[P.facet_index({t, j})];
        relations.push_back(std::move(rel));
    }

    Presentation<C> pres(default_var_names(r), std::move(caps), std::move(relations));
    return QuotientPresentation<C>(P, std::move(pres), std::move(subs));
}

template <class C>
Poly<C> normal_form(const Poly<C>& p, const QuotientPresentation<C>& q) {
    return q.normal_form(p);
}

inline Mono top_standard_monomial(const SimplexProduct& P) {
    return Mono(P.factor_dims().begin(), P.factor_dims().end());
}

// Fundamental-class calibration. For each vertex v, the square-free product
// of its n facet classes reduces to c_v * (top standard monomial) with
// c_v = +-1, and sigma_P(v) * det(Lambda_v) / c_v is one constant epsilon.
// sigma_P is the polytope-frame orientation sign; the convention is fixed so
// that the standard projective-space products carry their classical Chern
// numbers.
struct Calibration {
    int epsilon = 1;
};

template <class C>
Poly<C> vertex_monomial(const QuotientPresentation<C>& q, const Vertex& v) {
    const auto& P = q.polytope();
    Poly<C> prod = Poly<C>::constant(q.nvars(), C(1));
    for (const auto& f : P.facets_at(v)) prod *= q.facet_class(f);
    return prod;
}

inline Calibration calibrate(const QuotientPresentation<ZInt>& q, const CharMatrix& lambda) {
    detail::check_ring<ZInt>(lambda);
    const auto& P = q.polytope();
    Mono top = q.top_standard_monomial();
    int epsilon = 0;
    for (const auto& v : P.vertices()) {
        Poly<ZInt> nf = q.normal_form(vertex_monomial(q, v));
        if (nf.term_count() != 1)
            throw CalibrationError("vertex monomial does not reduce to the top monomial at " +
                                   v.str());
        ZInt c = nf.coeff(top);
        if (c != 1 && c != -1)
            throw CalibrationError("vertex monomial has non-unit coefficient at " + v.str());
        ZInt d = det(lambda.columns_at(v));
        if (d != 1 && d != -1)
            throw CalibrationError("vertex basis is not unimodular at " + v.str() +
                                   " (invalid matrix?)");
        int sign = P.orientation_sign(v) * (d == 1 ? 1 : -1) * (c == 1 ? 1 : -1);
        if (epsilon == 0) epsilon = sign;
        else if (epsilon != sign)
            throw CalibrationError("calibration constant differs across vertices (at " + v.str() +
                                   ")");
    }
    return {epsilon};
}

// <p, [M]> for a homogeneous class p of top degree, INT ring.
inline ZInt pairing(const Poly<ZInt>& p, const QuotientPresentation<ZInt>& q,
                    const CharMatrix& lambda, const Calibration* cal = nullptr) {
    int deg = 0;
    if (!p.is_homogeneous(&deg) || (!p.is_zero() && deg != q.polytope().n()))
        throw ShapeError("pairing requires a homogeneous class of top degree");
    Calibration c = cal ? *cal : calibrate(q, lambda);
    ZInt coeff = q.presentation().top_coefficient(p);
    return c.epsilon == 1 ? coeff : ZInt(-coeff);
}

// MOD2 variant: sign-free.
inline F2 pairing(const Poly<F2>& p, const QuotientPresentation<F2>& q) {
    int deg = 0;
    if (!p.is_homogeneous(&deg) || (!p.is_zero() && deg != q.polytope().n()))
        throw ShapeError("pairing requires a homogeneous class of top degree");
    return q.presentation().top_coefficient(p);
}

}  // namespace qtoric
