#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qtoric/errors.hpp"

namespace qtoric {

// A facet of a product of simplices: `face` of the `factor`-th simplex.
// Indices are 0-based internally; user-facing text is 1-based.
struct FacetId {
    int factor = 0;
    int face = 0;
    friend bool operator==(const FacetId& a, const FacetId& b) {
        return a.factor == b.factor && a.face == b.face;
    }
};

// A vertex, stored as the excluded face of each factor: the vertex is the
// intersection of every facet except the excluded one per factor.
struct Vertex {
    std::vector<int> excluded;  // one face index per factor
    friend bool operator==(const Vertex& a, const Vertex& b) { return a.excluded == b.excluded; }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < excluded.size(); ++i) {
            if (i) os << ',';
            os << excluded[i] + 1;
        }
        os << ')';
        return os.str();
    }
};

// Product of simplices Delta^{k_1} x ... x Delta^{k_r} with the fixed
// factor-major facet ordering. Zero-dimensional factors are dropped at
// construction: a point contributes no facets.
class SimplexProduct {
public:
    explicit SimplexProduct(std::vector<int> dims) {
        for (int d : dims) {
            if (d < 0) throw ParseError("negative simplex dimension");
            if (d > 0) dims_.push_back(d);
        }
        if (dims_.empty()) throw ParseError("empty polytope: all factor dimensions are zero");
        n_ = std::accumulate(dims_.begin(), dims_.end(), 0);
        m_ = n_ + static_cast<int>(dims_.size());
        facet_offset_.resize(dims_.size());
        int off = 0;
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            facet_offset_[i] = off;
            off += dims_[i] + 1;
        }
    }

    int factor_count() const { return static_cast<int>(dims_.size()); }
    int factor_dim(int i) const { return dims_[i]; }
    const std::vector<int>& factor_dims() const { return dims_; }
    int n() const { return n_; }
    int m() const { return m_; }

    long vertex_count() const {
        long v = 1;
        for (int d : dims_) v *= d + 1;
        return v;
    }

    std::vector<FacetId> facets() const {
        std::vector<FacetId> out;
        out.reserve(m_);
        for (int i = 0; i < factor_count(); ++i)
            for (int j = 0; j <= dims_[i]; ++j) out.push_back({i, j});
        return out;
    }

    int facet_index(const FacetId& f) const {
        if (f.factor < 0 || f.factor >= factor_count() || f.face < 0 || f.face > dims_[f.factor])
            throw ShapeError("facet id out of range");
        return facet_offset_[f.factor] + f.face;
    }

    // Vertices in lexicographic order of excluded-face tuples.
    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        out.reserve(vertex_count());
        Vertex v;
        v.excluded.assign(factor_count(), 0);
        while (true) {
            out.push_back(v);
            int i = factor_count() - 1;
            while (i >= 0) {
                if (++v.excluded[i] <= dims_[i]) break;
                v.excluded[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
        return out;
    }

    // The n facets meeting at a vertex, in global facet order.
    std::vector<FacetId> facets_at(const Vertex& v) const {
        if (static_cast<int>(v.excluded.size()) != factor_count())
            throw ShapeError("vertex arity does not match polytope");
        std::vector<FacetId> out;
        out.reserve(n_);
        for (int i = 0; i < factor_count(); ++i) {
            if (v.excluded[i] < 0 || v.excluded[i] > dims_[i])
                throw ShapeError("vertex face index out of range");
            for (int j = 0; j <= dims_[i]; ++j)
                if (j != v.excluded[i]) out.push_back({i, j});
        }
        return out;
    }

    // The distinguished vertex whose facets are everything except the last
    // facet of each factor. Its facet set indexes the eliminated variables.
    Vertex base_vertex() const {
        Vertex v;
        for (int d : dims_) v.excluded.push_back(d);
        return v;
    }

    // Sign of the vertex frame of inward/outward facet normals against the
    // product orientation of the polytope. Together with the characteristic
    // submatrix determinant this yields the per-vertex fundamental-class
    // sign; the overall convention is normalized so that standard projective
    // products get their classical Chern numbers.
    int orientation_sign(const Vertex& v) const {
        if (static_cast<int>(v.excluded.size()) != factor_count())
            throw ShapeError("vertex arity does not match polytope");
        int s = -1;
        for (int i = 0; i < factor_count(); ++i) {
            int k = dims_[i];
            int e = v.excluded[i];
            if (e == k) {
                if (k % 2 != 0) s = -s;  // excluded last face: factor (-1)^k
            } else {
                if (e % 2 != 0) s = -s;  // 0-based face e: factor (-1)^e
            }
        }
        return s;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (i) os << " x ";
            os << "Delta^" << dims_[i];
        }
        return os.str();
    }

    friend bool operator==(const SimplexProduct& a, const SimplexProduct& b) {
        return a.dims_ == b.dims_;
    }
    friend bool operator!=(const SimplexProduct& a, const SimplexProduct& b) { return !(a == b); }

private:
    std::vector<int> dims_;
    std::vector<int> facet_offset_;
    int n_ = 0, m_ = 0;
};

// Convenience alias matching the domain operation name.
inline SimplexProduct product_of_simplices(std::vector<int> dims) {
    return SimplexProduct(std::move(dims));
}

}  // namespace qtoric
