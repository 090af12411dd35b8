#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qtoric/errors.hpp"
#include "qtoric/f2.hpp"
#include "qtoric/ints.hpp"

namespace qtoric {

// Exponent vector over a fixed variable set.
using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Descending lexicographic order used for canonical term listing.
struct MonoDescLex {
    bool operator()(const Mono& a, const Mono& b) const { return a > b; }
};

// All monomials in `nvars` variables of total degree `deg`, descending lex.
inline std::vector<Mono> monomials_of_degree(int nvars, int deg) {
    std::vector<Mono> out;
    Mono cur(nvars, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[pos] = 0;
    };
    if (nvars == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, deg);
    return out;
}

// Sparse exact polynomial with coefficients in C (ZInt or F2).
// No zero coefficients are stored.
template <class C>
class Poly {
public:
    using Terms = std::map<Mono, C, MonoDescLex>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, const C& c) {
        Poly p(nvars);
        p.add_term(Mono(nvars, 0), c);
        return p;
    }

    static Poly variable(int nvars, int i, const C& c = C(1)) {
        Poly p(nvars);
        Mono m(nvars, 0);
        m[i] = 1;
        p.add_term(m, c);
        return p;
    }

    static Poly monomial(Mono m, const C& c) {
        Poly p(static_cast<int>(m.size()));
        p.add_term(std::move(m), c);
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    C coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }

    bool is_homogeneous(int* deg_out = nullptr) const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int md = mono_degree(m);
            if (d == -1) d = md;
            else if (md != d) return false;
        }
        if (deg_out) *deg_out = (d == -1 ? 0 : d);
        return true;
    }

    void add_term(Mono m, const C& c) {
        if (qtoric::is_zero(c)) return;
        check_arity(m);
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (qtoric::is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly scaled(const C& c) const {
        Poly r(nvars_);
        if (qtoric::is_zero(c)) return r;
        for (const auto& [m, k] : terms_) r.add_term(m, k * c);
        return r;
    }

    // Terms of total degree exactly d.
    Poly component(int d) const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_)
            if (mono_degree(m) == d) r.terms_.emplace(m, c);
        return r;
    }

    // Product with truncation: drops all terms of degree > cap.
    Poly mul_truncated(const Poly& o, int cap) const {
        check_same(o);
        Poly r(nvars_);
        for (const auto& [ma, ca] : terms_) {
            int da = mono_degree(ma);
            for (const auto& [mb, cb] : o.terms_) {
                if (da + mono_degree(mb) > cap) continue;
                r.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void check_arity(const Mono& m) const {
        if (static_cast<int>(m.size()) != nvars_)
            throw ShapeError("monomial arity does not match polynomial variable count");
    }
    void check_same(const Poly& o) const {
        if (nvars_ != o.nvars_) throw ShapeError("polynomial variable counts differ");
    }

    int nvars_ = 0;
    Terms terms_;
};

namespace detail {

inline void print_coeff_mono(std::ostream& os, const ZInt& c, bool first) {
    ZInt a = c < 0 ? ZInt(-c) : c;
    if (first) {
        if (c < 0) os << '-';
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    os << a;
}

inline void print_coeff_mono(std::ostream& os, const F2& c, bool first) {
    (void)c;
    if (!first) os << " + ";
    os << 1;
}

inline bool coeff_is_one_like(const ZInt& c) { return c == 1 || c == -1; }
inline bool coeff_is_one_like(const F2& c) { (void)c; return true; }

inline bool coeff_is_negative(const ZInt& c) { return c < 0; }
inline bool coeff_is_negative(const F2&) { return false; }

}  // namespace detail

// Canonical sparse text form: terms in descending lex order, explicit signs,
// e.g. "x^2*y^4 - 2*x*y^5 + y^6".
template <class C>
std::string poly_to_string(const Poly<C>& p, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != p.nvars())
        throw ShapeError("variable name count does not match polynomial");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += names[i];
            if (m[i] > 1) vars += '^' + std::to_string(m[i]);
        }
        if (vars.empty()) {
            detail::print_coeff_mono(os, c, first);
        } else if (detail::coeff_is_one_like(c)) {
            if (first) {
                if (detail::coeff_is_negative(c)) os << '-';
            } else {
                os << (detail::coeff_is_negative(c) ? " - " : " + ");
            }
            os << vars;
        } else {
            detail::print_coeff_mono(os, c, first);
            os << '*' << vars;
        }
        first = false;
    }
    return os.str();
}

// Default variable names: x,y,z for up to three variables, else x1..xr.
inline std::vector<std::string> default_var_names(int nvars) {
    if (nvars <= 3) {
        static const char* xyz[] = {"x", "y", "z"};
        std::vector<std::string> names;
        for (int i = 0; i < nvars; ++i) names.push_back(xyz[i]);
        return names;
    }
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

}  // namespace qtoric
