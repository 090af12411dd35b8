#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/matrix.hpp"
#include "qtoric/poly.hpp"

namespace qtoric {

// A graded complete-intersection presentation: variables x_1..x_r with
// exponent caps c_i, and one homogeneous relation per variable whose
// x_i^{c_i+1} coefficient is a unit. Standard monomials (all exponents
// within caps) form a basis of the quotient in each degree; the unique
// top-degree standard monomial is prod x_i^{c_i}.
//
// Normal forms are computed from per-degree rewrite tables: the degree-D
// slice of the ideal is row-reduced once, which expresses every non-standard
// monomial as an exact combination of standard ones. This stays exact and
// canonical where naive term rewriting against the relations can cycle.
template <class C>
class Presentation {
public:
    Presentation(std::vector<std::string> var_names, std::vector<int> caps,
                 std::vector<Poly<C>> relations)
        : names_(std::move(var_names)), caps_(std::move(caps)), relations_(std::move(relations)) {
        const int r = static_cast<int>(caps_.size());
        if (static_cast<int>(names_.size()) != r || static_cast<int>(relations_.size()) != r)
            throw ShapeError("presentation: one name and one relation per variable");
        top_degree_ = 0;
        for (int c : caps_) {
            if (c < 0) throw ShapeError("presentation: negative cap");
            top_degree_ += c;
        }
        for (int i = 0; i < r; ++i) {
            int d = 0;
            if (!relations_[i].is_homogeneous(&d) || d != caps_[i] + 1)
                throw DegeneracyError("relation " + std::to_string(i) +
                                      " is not homogeneous of degree cap+1");
            Mono lead(r, 0);
            lead[i] = caps_[i] + 1;
            C lc = relations_[i].coeff(lead);
            if (!is_unit(lc))
                throw DegeneracyError("relation " + std::to_string(i) +
                                      " has non-unit leading coefficient");
            if (lc != C(1)) relations_[i] = -relations_[i];
        }
        build_rewrites();
    }

    int nvars() const { return static_cast<int>(caps_.size()); }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::vector<int>& caps() const { return caps_; }
    const std::vector<Poly<C>>& relations() const { return relations_; }
    int top_degree() const { return top_degree_; }

    Mono top_monomial() const { return Mono(caps_.begin(), caps_.end()); }

    bool is_standard(const Mono& m) const {
        for (int i = 0; i < nvars(); ++i)
            if (m[i] > caps_[i]) return false;
        return true;
    }

    // Unique representative of p modulo the relation ideal, supported on
    // standard monomials.
    Poly<C> normal_form(const Poly<C>& p) const {
        if (p.nvars() != nvars()) throw ShapeError("normal_form: variable count mismatch");
        Poly<C> out(nvars());
        for (const auto& [m, c] : p.terms()) {
            int d = mono_degree(m);
            if (d > top_degree_) continue;  // quotient vanishes above top degree
            if (is_standard(m)) {
                out.add_term(m, c);
                continue;
            }
            if (!rewrites_[d])
                throw DegeneracyError("degree-" + std::to_string(d) + " slice: " +
                                      degenerate_reason_[d]);
            auto it = rewrites_[d]->find(m);
            if (it == rewrites_[d]->end())
                throw DegeneracyError("normal_form: no rewrite for a non-standard monomial");
            out += it->second.scaled(c);
        }
        return out;
    }

    // True when every degree reduces onto the standard monomials; named
    // examples and Stong presentations always do, but a general valid matrix
    // can fail this and then top-degree operations raise DegeneracyError.
    bool fully_reducible() const {
        for (const auto& t : rewrites_)
            if (!t) return false;
        return true;
    }

    // Coefficient of the top standard monomial in the normal form of a
    // homogeneous top-degree class; the MOD2 pairing and the unsigned part
    // of the INT pairing.
    C top_coefficient(const Poly<C>& p) const {
        return normal_form(p).coeff(top_monomial());
    }

private:
    void build_rewrites() {
        rewrites_.assign(top_degree_ + 1, std::nullopt);
        degenerate_reason_.assign(top_degree_ + 1, {});
        for (int d = 0; d <= top_degree_; ++d) {
            try {
                build_degree(d);
            } catch (const DegeneracyError& e) {
                rewrites_[d] = std::nullopt;
                degenerate_reason_[d] = e.what();
            }
        }
    }

    void build_degree(int d) {
        const int r = nvars();
        {
            auto monos = monomials_of_degree(r, d);
            std::vector<Mono> nonstd, std_monos;
            for (const auto& m : monos)
                (is_standard(m) ? std_monos : nonstd).push_back(m);
            if (nonstd.empty()) {
                rewrites_[d].emplace();
                return;
            }

            // Column order: non-standard monomials first, then standard.
            std::map<Mono, int, MonoDescLex> col;
            int idx = 0;
            for (const auto& m : nonstd) col[m] = idx++;
            for (const auto& m : std_monos) col[m] = idx++;
            const int ncols = idx;

            // Degree-d slice of the ideal: m * relation_i over all monomial
            // multipliers m of the right degree.
            std::vector<std::vector<C>> rows;
            for (int i = 0; i < r; ++i) {
                int rel_deg = caps_[i] + 1;
                if (d < rel_deg) continue;
                for (const auto& mult : monomials_of_degree(r, d - rel_deg)) {
                    std::vector<C> row(ncols, C(0));
                    for (const auto& [m, c] : relations_[i].terms())
                        row[col.at(mono_mul(mult, m))] += c;
                    rows.push_back(std::move(row));
                }
            }
            auto pivot_row = row_echelon(rows, ncols);

            // Every non-standard column must carry a unit pivot, and no
            // standard column may: the quotient is free on standard monomials.
            const int n_nonstd = static_cast<int>(nonstd.size());
            for (int c = 0; c < ncols; ++c) {
                if (c < n_nonstd) {
                    if (pivot_row[c] == -1 || !is_unit(rows[pivot_row[c]][c]))
                        throw DegeneracyError(
                            "presentation slice lacks a unit pivot on a non-standard monomial");
                } else if (pivot_row[c] != -1) {
                    throw DegeneracyError("presentation slice has a pivot on a standard monomial");
                }
            }

            std::map<Mono, Poly<C>, MonoDescLex> table;
            for (int c = 0; c < n_nonstd; ++c) {
                const auto& row = rows[pivot_row[c]];
                Poly<C> tail(r);
                for (int j = 0; j < ncols; ++j) {
                    if (j == c || is_zero(row[j])) continue;
                    if (j < n_nonstd)
                        throw DegeneracyError("rewrite row touches another non-standard monomial");
                    tail.add_term(std_monos[j - n_nonstd], -row[j]);
                }
                table.emplace(nonstd[c], std::move(tail));
            }
            rewrites_[d] = std::move(table);
        }
    }

    std::vector<std::string> names_;
    std::vector<int> caps_;
    std::vector<Poly<C>> relations_;
    int top_degree_ = 0;
    std::vector<std::optional<std::map<Mono, Poly<C>, MonoDescLex>>> rewrites_;  // by degree
    std::vector<std::string> degenerate_reason_;
};

}  // namespace qtoric
