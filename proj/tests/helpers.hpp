#pragma once

// Shared generators and oracles for the test suites.

#include <optional>
#include <random>

#include "qtoric/bordism.hpp"

namespace testutil {

using namespace qtoric;

// Canonical-form candidate: identity block on the base-vertex facets, free
// columns drawn uniformly from [-bound, bound]. Returns nullopt when the
// draw fails the vertex-basis condition.
inline std::optional<CharMatrix> random_canonical(std::mt19937_64& rng, const SimplexProduct& P,
                                                  int bound, Ring ring = Ring::Int) {
    const int n = P.n();
    Mat<ZInt> e(n, P.m());
    auto base = P.facets_at(P.base_vertex());
    for (std::size_t i = 0; i < base.size(); ++i)
        e.at(static_cast<int>(i), P.facet_index(base[i])) = 1;
    std::uniform_int_distribution<int> dist(ring == Ring::Int ? -bound : 0,
                                            ring == Ring::Int ? bound : 1);
    for (int t = 0; t < P.factor_count(); ++t) {
        int j = P.facet_index({t, P.factor_dim(t)});
        for (int i = 0; i < n; ++i) e.at(i, j) = dist(rng);
    }
    CharMatrix m(P, ring, std::move(e));
    if (!is_valid(m)) return std::nullopt;
    return m;
}

// Product of random elementary row operations; always in GL(n, Z).
inline Mat<ZInt> random_unimodular(std::mt19937_64& rng, int n, int ops = 10) {
    Mat<ZInt> g = Mat<ZInt>::identity(n);
    std::uniform_int_distribution<int> row(0, n - 1), coef(-2, 2), kind(0, 2);
    for (int t = 0; t < ops; ++t) {
        int i = row(rng), j = row(rng);
        switch (kind(rng)) {
            case 0:
                if (i != j) {
                    int c = coef(rng);
                    for (int k = 0; k < n; ++k) g.at(i, k) += ZInt(c) * g.at(j, k);
                }
                break;
            case 1:
                if (i != j)
                    for (int k = 0; k < n; ++k) std::swap(g.at(i, k), g.at(j, k));
                break;
            default:
                for (int k = 0; k < n; ++k) g.at(i, k) = -g.at(i, k);
        }
    }
    return g;
}

inline CharMatrix transform(const Mat<ZInt>& g, const CharMatrix& m) {
    return CharMatrix(m.polytope(), m.ring(), g * m.entries());
}

// Independent reduction oracle: literal term rewriting against the monic
// relations (subtract (term/x_i^{cap+1}) * relation_i). Diverges on some
// valid matrices, so the step cap turns divergence into a reported failure;
// on the named examples and Stong presentations it terminates.
template <class C>
std::optional<Poly<C>> naive_reduce(Poly<C> p, const Presentation<C>& pres,
                                    long max_steps = 500000) {
    const int r = pres.nvars();
    for (long step = 0; step < max_steps; ++step) {
        std::optional<Mono> hit;
        int var = -1;
        for (const auto& [m, c] : p.terms()) {
            for (int i = 0; i < r; ++i)
                if (m[i] > pres.caps()[i]) {
                    hit = m;
                    var = i;
                    break;
                }
            if (hit) break;
        }
        if (!hit) return p;
        C c = p.coeff(*hit);
        Mono rest = *hit;
        rest[var] -= pres.caps()[var] + 1;
        p -= Poly<C>::monomial(std::move(rest), c) * pres.relations()[var];
    }
    return std::nullopt;  // did not terminate within the step cap
}

}  // namespace testutil
