#pragma once

#include <algorithm>
#include <numeric>

#include "qtoric/charmatrix.hpp"
#include "qtoric/invariants.hpp"
#include "qtoric/presentation.hpp"

namespace qtoric {

// Parameters (n_1,...,n_k), weakly decreasing, entries >= 0, of the real
// projective bundle RP(n_1,...,n_k) over RP^{n_1} x ... x RP^{n_k}.
class StongParams {
public:
    explicit StongParams(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw ParseError("Stong parameters must be nonempty");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw ParseError("Stong parameters must be >= 0");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw ParseError("Stong parameters must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int k() const { return static_cast<int>(parts_.size()); }
    int ell() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int dimension() const { return ell() + k() - 1; }
    int positive_count() const {
        return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                              [](int p) { return p > 0; }));
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

inline int stong_dimension(const StongParams& s) { return s.dimension(); }

// Indecomposability in the unoriented bordism ring, for k > 1:
// sum_i C(ell+k-2, n_i) must be odd. Binomial parity via Lucas.
inline bool is_indecomposable(const StongParams& s) {
    if (s.k() <= 1)
        throw CapError("indecomposability criterion requires k > 1");
    const std::uint64_t a = static_cast<std::uint64_t>(s.ell() + s.k() - 2);
    int parity = 0;
    for (int ni : s.parts())
        if (binomial_is_odd(a, static_cast<std::uint64_t>(ni))) parity ^= 1;
    return parity == 1;
}

// Orientable iff k and every n_i are even. The bundle criterion assumes
// k > 1; for k = 1 the space is plain RP^n, orientable iff n is odd (or a
// point), and w_1 of the class formula agrees with that.
inline bool is_orientable(const StongParams& s) {
    if (s.k() == 1) return s.parts()[0] % 2 == 1 || s.parts()[0] == 0;
    if (s.k() % 2 != 0) return false;
    for (int ni : s.parts())
        if (ni % 2 != 0) return false;
    return true;
}

// Mod-2 cohomology presentation: variables a_i (one per positive n_i) and e,
// relations a_i^{n_i+1} and e^z * prod(a_i + e) where z counts zero parts
// (their a-classes vanish and are dropped up front). Caps: n_i for a_i and
// k-1 for e; the leading monomial of the product relation is e^k.
struct StongPresentation {
    Presentation<F2> pres;
    std::vector<int> positive_parts;  // the n_i > 0, in order
    int k = 0;

    int nvars() const { return pres.nvars(); }
    int evar() const { return pres.nvars() - 1; }
};

inline StongPresentation stong_presentation(const StongParams& s) {
    std::vector<int> pos;
    for (int ni : s.parts())
        if (ni > 0) pos.push_back(ni);
    const int p = static_cast<int>(pos.size());
    const int k = s.k();
    const int z = k - p;
    const int r = p + 1;  // a_1..a_p, e

    std::vector<std::string> names;
    for (int i = 0; i < p; ++i) names.push_back("a" + std::to_string(i + 1));
    names.push_back("e");

    std::vector<int> caps(pos.begin(), pos.end());
    caps.push_back(k - 1);

    std::vector<Poly<F2>> relations;
    for (int i = 0; i < p; ++i) {
        Mono m(r, 0);
        m[i] = pos[i] + 1;
        relations.push_back(Poly<F2>::monomial(std::move(m), F2(1)));
    }
    Poly<F2> prod = Poly<F2>::constant(r, F2(1));
    for (int i = 0; i < p; ++i) {
        Poly<F2> f = Poly<F2>::variable(r, i);
        f += Poly<F2>::variable(r, p);
        prod *= f;
    }
    for (int t = 0; t < z; ++t) prod *= Poly<F2>::variable(r, p);
    relations.push_back(std::move(prod));

    return {Presentation<F2>(std::move(names), std::move(caps), std::move(relations)), pos, k};
}

// Total Stiefel-Whitney class prod (1+a_i)^{n_i+1} (1+a_i+e), reduced per
// degree. Zero parts contribute (1+e) factors.
inline GradedClass<F2> sw_class_formula(const StongParams& s) {
    StongPresentation sp = stong_presentation(s);
    const int r = sp.nvars();
    const int p = static_cast<int>(sp.positive_parts.size());
    const int dim = s.dimension();

    std::vector<Poly<F2>> comp(dim + 1, Poly<F2>(r));
    comp[0] = Poly<F2>::constant(r, F2(1));
    auto mul_in = [&](const Poly<F2>& factor_minus_one) {
        for (int d = dim; d >= 1; --d) {
            Poly<F2> up = comp[d] + comp[d - 1] * factor_minus_one;
            comp[d] = sp.pres.normal_form(up);
        }
    };
    for (int i = 0; i < p; ++i) {
        Poly<F2> a = Poly<F2>::variable(r, i);
        for (int t = 0; t < sp.positive_parts[i] + 1; ++t) mul_in(a);
        Poly<F2> ae = a + Poly<F2>::variable(r, sp.evar());
        mul_in(ae);
    }
    Poly<F2> e = Poly<F2>::variable(r, sp.evar());
    for (int t = 0; t < sp.k - p; ++t) mul_in(e);
    return {std::move(comp)};
}

// SW-number table computed from the bundle presentation (independent of the
// small-cover facet-ring route).
inline InvariantTable stong_sw_numbers(const StongParams& s) {
    StongPresentation sp = stong_presentation(s);
    GradedClass<F2> w = sw_class_formula(s);
    const int dim = s.dimension();
    InvariantTable t;
    t.dims = {};  // not a polytope-indexed table
    t.ring = Ring::Mod2;
    for (const auto& pi : partitions_of(dim)) {
        Poly<F2> prod = Poly<F2>::constant(sp.nvars(), F2(1));
        for (int part : pi.parts()) prod = sp.pres.normal_form(prod * w[part]);
        t.entries[pi] = sp.pres.top_coefficient(prod).value();
    }
    return t;
}

// The polytope of the small-cover model: Delta^{n_1} x ... x Delta^{n_p} x
// Delta^{k-1} (zero parts only grow the fiber simplex; for k = 1 the fiber
// is a point and drops out).
inline SimplexProduct stong_polytope(const StongParams& s) {
    std::vector<int> dims;
    for (int ni : s.parts())
        if (ni > 0) dims.push_back(ni);
    dims.push_back(s.k() - 1);
    return SimplexProduct(std::move(dims));
}

// Characteristic matrix of RP(n_1,...,n_k) as a small cover, in the fixed
// facet ordering. Block shape: per positive factor an identity block plus an
// all-ones column with a bottom marker; the fiber factor carries an identity
// block and an all-ones column. For k = 1 this degenerates to [I_n | 1_n]
// on Delta^{n_1} (plain projective space).
inline CharMatrix stong_char_matrix(const StongParams& s) {
    std::vector<int> pos;
    for (int ni : s.parts())
        if (ni > 0) pos.push_back(ni);
    const int p = static_cast<int>(pos.size());
    const int k = s.k();

    if (k == 1) {
        const int n = s.parts()[0];
        if (n == 0) throw ParseError("RP(0) is a point: no characteristic matrix");
        SimplexProduct P({n});
        Mat<ZInt> e(n, n + 1);
        for (int i = 0; i < n; ++i) {
            e.at(i, i) = 1;
            e.at(i, n) = 1;
        }
        return CharMatrix(std::move(P), Ring::Mod2, std::move(e));
    }

    SimplexProduct P = stong_polytope(s);
    const int n = P.n();
    const int ell = std::accumulate(pos.begin(), pos.end(), 0);
    Mat<ZInt> e(n, P.m());

    int row0 = 0, col0 = 0;
    for (int i = 0; i < p; ++i) {
        for (int t = 0; t < pos[i]; ++t) {
            e.at(row0 + t, col0 + t) = 1;       // I_{n_i}
            e.at(row0 + t, col0 + pos[i]) = 1;  // 1_{n_i}
        }
        // Bottom marker under the factor's last column: J_i for factors
        // before the k-th, the all-ones column for the k-th factor itself.
        if (p == k && i == p - 1) {
            for (int t = 0; t < k - 1; ++t) e.at(ell + t, col0 + pos[i]) = 1;
        } else {
            e.at(ell + i, col0 + pos[i]) = 1;
        }
        row0 += pos[i];
        col0 += pos[i] + 1;
    }
    for (int t = 0; t < k - 1; ++t) {
        e.at(ell + t, col0 + t) = 1;      // I_{k-1}
        e.at(ell + t, col0 + k - 1) = 1;  // 1_{k-1}
    }
    return CharMatrix(std::move(P), Ring::Mod2, std::move(e));
}

// Oracle equivalence of the two SW-number routes: the bundle presentation
// versus the small-cover facet ring. Full-table enumeration, capped.
inline bool sw_numbers_cross_check(const StongParams& s, int dimension_cap = 12) {
    if (s.dimension() > dimension_cap)
        throw CapError("sw_numbers_cross_check: dimension " + std::to_string(s.dimension()) +
                       " exceeds cap " + std::to_string(dimension_cap));
    InvariantTable from_formula = stong_sw_numbers(s);
    InvariantTable from_cover =
        SwEngine(stong_polytope(s), stong_char_matrix(s)).all_numbers();
    return from_formula.entries == from_cover.entries;
}

}  // namespace qtoric
