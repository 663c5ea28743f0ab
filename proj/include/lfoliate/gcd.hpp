#pragma once

#include <optional>
#include <vector>

#include "lfoliate/poly.hpp"

namespace lfoliate {

// Multivariate gcd by content/primitive-part reduction with a subresultant
// PRS in the main variable. Result is normalized to leading coefficient 1 in
// graded lex order; gcd(p, 0) = normalized p; gcd(0, 0) = 0.

namespace detail {

// View p as a univariate polynomial in variable v with Poly coefficients.
inline std::vector<Poly> coeffs_in(const Poly& p, int v) {
    int d = p.degree_in(v);
    std::vector<Poly> cs(d + 1, Poly(p.nvars()));
    for (auto& [e, c] : p.terms()) {
        Expo f = e;
        int k = f[v];
        f[v] = 0;
        cs[k].add_term(f, c);
    }
    return cs;
}

inline Poly from_coeffs(const std::vector<Poly>& cs, int v, int nvars) {
    Poly r(nvars);
    Poly zv = Poly::variable(nvars, v);
    for (int k = 0; k < (int)cs.size(); ++k) r += cs[k] * zv.pow(k);
    return r;
}

inline int deg_in(const std::vector<Poly>& cs) {
    for (int k = (int)cs.size() - 1; k >= 0; --k)
        if (!cs[k].is_zero()) return k;
    return -1;
}

// Pseudo-remainder of a by b in variable v (coefficients are Polys).
inline Poly prem(const Poly& a, const Poly& b, int v) {
    int da = a.degree_in(v), db = b.degree_in(v);
    if (db < 0) throw std::domain_error("prem: zero divisor");
    if (da < db) return a;
    auto bc = coeffs_in(b, v);
    Poly lb = bc[db];
    Poly r = a;
    Poly zv = Poly::variable(a.nvars(), v);
    int guard = da - db + 1;
    for (int step = 0; step <= guard && r.degree_in(v) >= db && !r.is_zero(); ++step) {
        auto rc = coeffs_in(r, v);
        int dr = deg_in(rc);
        if (dr < db) break;
        Poly lr = rc[dr];
        r = lb * r - lr * zv.pow(dr - db) * b;
    }
    return r;
}

}  // namespace detail

Poly poly_gcd(const Poly& p, const Poly& q);  // forward

namespace detail {

// gcd of a list of polynomials (content computation).
inline Poly gcd_list(const std::vector<Poly>& ps) {
    Poly g(ps.empty() ? 0 : ps.front().nvars());
    for (auto& p : ps) {
        g = poly_gcd(g, p);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

}  // namespace detail

inline Poly normalize_monic(const Poly& p) {
    if (p.is_zero()) return p;
    Rat lc = p.leading_coefficient();
    return Rat(1) / lc * p;
}

inline Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("poly_gcd: variable-count mismatch");
    if (p.is_zero()) return normalize_monic(q);
    if (q.is_zero()) return normalize_monic(p);
    if (p.is_constant() || q.is_constant()) return Poly::constant(p.nvars(), Rat(1));

    // Main variable: highest index occurring in either operand.
    int v = -1;
    for (int i = p.nvars() - 1; i >= 0; --i)
        if (p.depends_on(i) || q.depends_on(i)) {
            v = i;
            break;
        }
    if (v < 0) return Poly::constant(p.nvars(), Rat(1));

    if (!p.depends_on(v) || !q.depends_on(v)) {
        // One operand is free of the main variable: gcd divides its content.
        const Poly& free_one = p.depends_on(v) ? q : p;
        const Poly& other = p.depends_on(v) ? p : q;
        Poly cont = detail::gcd_list(detail::coeffs_in(other, v));
        return normalize_monic(poly_gcd(free_one, cont));
    }

    Poly cp = detail::gcd_list(detail::coeffs_in(p, v));
    Poly cq = detail::gcd_list(detail::coeffs_in(q, v));
    Poly pp = *exact_div(p, cp);
    Poly qq = *exact_div(q, cq);
    Poly cont_gcd = poly_gcd(cp, cq);

    // Subresultant PRS on the primitive parts.
    Poly a = pp, b = qq;
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    Poly g = Poly::constant(p.nvars(), Rat(1));
    Poly h = Poly::constant(p.nvars(), Rat(1));
    while (true) {
        int da = a.degree_in(v), db = b.degree_in(v);
        int delta = da - db;
        Poly r = detail::prem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            // Primitive parts are coprime in v.
            return normalize_monic(cont_gcd);
        }
        Poly divisor = g * h.pow(delta);
        a = b;
        auto rd = exact_div(r, divisor);
        b = rd ? *rd : r;  // subresultant division is exact; fallback keeps correctness
        g = detail::coeffs_in(a, v)[a.degree_in(v)];
        if (delta >= 1) {
            auto hh = exact_div(g.pow(delta), h.pow(delta - 1));
            h = hh ? *hh : g.pow(delta);
        }
    }
    // b is (a scalar multiple of) the gcd of the primitive parts, up to content.
    Poly cb = detail::gcd_list(detail::coeffs_in(b, v));
    Poly ppb = *exact_div(b, cb);
    return normalize_monic(cont_gcd * ppb);
}

}  // namespace lfoliate
