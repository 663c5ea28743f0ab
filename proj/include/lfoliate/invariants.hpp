#pragma once

#include <string>
#include <vector>

#include "lfoliate/foliation.hpp"
#include "lfoliate/lie.hpp"

namespace lfoliate {

// Infinitesimal action of a matrix algebra on a coefficient space: abstract
// generators (named matrices of the source algebra) together with their images
// as linear fields. Convention: for g_t = exp(tA) acting on polynomials by
// g.P = P o g^{-1}, the induced field on the coefficient space is d/dt|_0 of
// the coefficient vector of g_t.P. Under the field bracket this reverses the
// matrix commutator, matching the bracket<->BA-AB identification used
// throughout.
struct InducedAction {
    std::vector<std::string> names;     // generator labels in the source algebra
    std::vector<RatMat> source;         // generator matrices there
    std::vector<LinField> rep;          // images on the coefficient space
    // structure table of the source algebra: [A_i, A_j] = sum_k c_k A_k
    // (computed on demand by tests via matrix arithmetic)
};

// Is the map A_i -> rep_i a morphism up to the fixed sign convention, i.e.
// field-bracket [rep_i, rep_j] = rep([A_j, A_i])?
inline bool is_lie_morphism(const InducedAction& act) {
    int m = (int)act.source.size();
    if (m == 0) return true;
    int sn = (int)act.source.front().size();
    LieSpan span = reduce_span(act.rep);
    RatMat srows;
    for (auto& s : act.source) {
        RatVec v;
        for (auto& row : s)
            for (auto& e : row) v.push_back(e);
        srows.push_back(v);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            // [A_j, A_i] in the source, coordinates in the source generators
            RatMat br = mat_zero(sn, sn);
            for (int r = 0; r < sn; ++r)
                for (int cidx = 0; cidx < sn; ++cidx) {
                    Rat s(0);
                    for (int k = 0; k < sn; ++k)
                        s += act.source[j][r][k] * act.source[i][k][cidx] -
                             act.source[i][r][k] * act.source[j][k][cidx];
                    br[r][cidx] = s;
                }
            RatVec target;
            for (auto& row : br)
                for (auto& e : row) target.push_back(e);
            auto co = coordinates_in(srows, target);
            if (!co) return false;
            // expected image
            RatMat im = mat_zero((int)act.rep.front().nvars(), (int)act.rep.front().nvars());
            for (int k = 0; k < m; ++k)
                for (size_t r = 0; r < im.size(); ++r)
                    for (size_t cidx = 0; cidx < im.size(); ++cidx)
                        im[r][cidx] += (*co)[k] * act.rep[k].matrix()[r][cidx];
            if (!(lin_bracket(act.rep[i], act.rep[j]) == LinField(im))) return false;
        }
    return true;
}

// sl2 = <e, f, h> acting on binary forms of degree d; the coefficient space is
// C^{d+1} with coordinates a_0..a_d for P = sum a_k x^{d-k} y^k.
inline InducedAction sl2_on_binary_forms(int d) {
    if (d < 1) throw std::invalid_argument("sl2_on_binary_forms: d >= 1");
    int n = d + 1;
    RatMat e = mat_zero(n, n), f = mat_zero(n, n), h = mat_zero(n, n);
    // e.P = -y dP/dx, f.P = -x dP/dy, h.P = sum (2k-d) a_k x^{d-k} y^k
    for (int k = 0; k < d; ++k) e[k + 1][k] = Rat(-(d - k));
    for (int k = 1; k <= d; ++k) f[k - 1][k] = Rat(-k);
    for (int k = 0; k <= d; ++k) h[k][k] = Rat(2 * k - d);
    InducedAction act;
    act.names = {"e", "f", "h"};
    act.source = {RatMat{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}},
                  RatMat{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}},
                  RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}}};
    act.rep = {LinField(e), LinField(f), LinField(h)};
    return act;
}

enum class MatrixKind { symmetric, antisymmetric };

// Coordinates of Sym(k)/ASym(k): row-major upper triangle. For symmetric
// matrices the diagonal is included.
inline std::vector<std::pair<int, int>> matrix_positions(int k, MatrixKind kind) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < k; ++i)
        for (int j = (kind == MatrixKind::symmetric ? i : i + 1); j < k; ++j)
            pos.push_back({i, j});
    return pos;
}

// Symbolic matrix over the coordinate polynomials.
inline std::vector<std::vector<Poly>> symbolic_matrix(int k, MatrixKind kind) {
    auto pos = matrix_positions(k, kind);
    int n = (int)pos.size();
    std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k, Poly(n)));
    for (int t = 0; t < n; ++t) {
        auto [i, j] = pos[t];
        m[i][j] = Poly::variable(n, t);
        if (i != j) m[j][i] = (kind == MatrixKind::symmetric ? Poly::variable(n, t)
                                                             : -Poly::variable(n, t));
    }
    return m;
}

// sl_k acting on symmetric/antisymmetric matrices by M -> -(A^T M + M A),
// the derivative of g.M = (tg^{-1}) M g^{-1}.
inline InducedAction sl_on_matrix_space(int k, MatrixKind kind) {
    if (k < 2) throw std::invalid_argument("sl_on_matrix_space: k >= 2");
    auto pos = matrix_positions(k, kind);
    int n = (int)pos.size();
    std::vector<RatMat> gens;
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            RatMat a = mat_zero(k, k);
            a[i][j] = 1;
            gens.push_back(a);
            names.push_back("E" + std::to_string(i) + std::to_string(j));
        }
    for (int i = 0; i + 1 < k; ++i) {
        RatMat a = mat_zero(k, k);
        a[i][i] = 1;
        a[i + 1][i + 1] = -1;
        gens.push_back(a);
        names.push_back("H" + std::to_string(i));
    }
    InducedAction act;
    act.names = names;
    act.source = gens;
    for (auto& a : gens) {
        // entries of -(A^T M + M A) expressed in the coordinates
        RatMat img = mat_zero(n, n);
        auto m = symbolic_matrix(k, kind);
        std::vector<std::vector<Poly>> out(k, std::vector<Poly>(k, Poly(n)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                Poly s(n);
                for (int t = 0; t < k; ++t) {
                    if (a[t][i] != 0) s += a[t][i] * m[t][j];  // (A^T M)_{ij}
                    if (a[t][j] != 0) s += a[t][j] * m[i][t];  // (M A)_{ij}
                }
                out[i][j] = -s;
            }
        for (int t = 0; t < n; ++t) {
            auto [i, j] = pos[t];
            const Poly& entry = out[i][j];
            for (auto& [e, coef] : entry.terms())
                for (int u = 0; u < n; ++u)
                    if (e[u] == 1) img[t][u] = coef;
        }
        act.rep.push_back(LinField(img));
    }
    return act;
}

// Discriminant of the binary cubic a0 x^3 + a1 x^2 y + a2 x y^2 + a3 y^3
// in the coefficient variables (ring with nvars >= 4, indices base..base+3).
inline Poly discriminant_cubic(int nvars = 4, int base = 0) {
    Poly a0 = Poly::variable(nvars, base), a1 = Poly::variable(nvars, base + 1);
    Poly a2 = Poly::variable(nvars, base + 2), a3 = Poly::variable(nvars, base + 3);
    return a1 * a1 * a2 * a2 - Rat(4) * a0 * a2.pow(3) - Rat(4) * a1.pow(3) * a3 -
           Rat(27) * a0 * a0 * a3 * a3 + Rat(18) * a0 * a1 * a2 * a3;
}

// Quartic invariants on V_5 coefficients a0..a4.
inline Poly quartic_P(int nvars = 5, int base = 0) {
    Poly a0 = Poly::variable(nvars, base), a1 = Poly::variable(nvars, base + 1);
    Poly a2 = Poly::variable(nvars, base + 2), a3 = Poly::variable(nvars, base + 3);
    Poly a4 = Poly::variable(nvars, base + 4);
    return a0 * a4 - rat(1, 4) * a1 * a3 + rat(1, 12) * a2 * a2;
}

inline Poly det3(const std::vector<std::vector<Poly>>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// H = det [[a0, a1/4, a2/6], [a1/4, a2/6, a3/4], [a2/6, a3/4, a4]].
inline Poly quartic_H(int nvars = 5, int base = 0) {
    auto v = [&](int i) { return Poly::variable(nvars, base + i); };
    std::vector<std::vector<Poly>> m{
        {v(0), rat(1, 4) * v(1), rat(1, 6) * v(2)},
        {rat(1, 4) * v(1), rat(1, 6) * v(2), rat(1, 4) * v(3)},
        {rat(1, 6) * v(2), rat(1, 4) * v(3), v(4)}};
    return det3(m);
}

// Delta = 2^8 (P^3 - 27 H^2), the quartic discriminant.
inline Poly quartic_Delta(int nvars = 5, int base = 0) {
    Poly p = quartic_P(nvars, base), h = quartic_H(nvars, base);
    return Rat(256) * (p.pow(3) - Rat(27) * h * h);
}

// j(lambda) = 256 (l^2-l+1)^3 / (l^2 (l-1)^2).
inline Rat jfun(const Rat& l) {
    if (l == 0 || l == 1) throw std::domain_error("jfun: pole at 0 and 1");
    Rat num = (l * l - l + 1);
    return Rat(256) * num * num * num / (l * l * (l - 1) * (l - 1));
}

// det of the symbolic 3x3 symmetric matrix laid out as
// [[z1,z2,z3],[z2,z4,z5],[z3,z5,z6]] in six coordinate variables.
inline Poly sym3_det(int nvars = 6, int base = 0) {
    auto v = [&](int i) { return Poly::variable(nvars, base + i); };
    std::vector<std::vector<Poly>> m{{v(0), v(1), v(2)}, {v(1), v(3), v(4)}, {v(2), v(4), v(5)}};
    return det3(m);
}

// Determinant by cofactor expansion (fine at desk scale).
inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    int k = (int)m.size();
    if (k == 1) return m[0][0];
    int n = m[0][0].nvars();
    Poly acc(n);
    for (int j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (int r = 1; r < k; ++r) {
            std::vector<Poly> row;
            for (int cidx = 0; cidx < k; ++cidx)
                if (cidx != j) row.push_back(m[r][cidx]);
            minor.push_back(row);
        }
        Poly term = m[0][j] * poly_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// Pfaffian by expansion along the first row; pf^2 = det.
inline Poly pfaffian(const std::vector<std::vector<Poly>>& m) {
    int k = (int)m.size();
    if (k % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
    for (int i = 0; i < k; ++i) {
        if (!m[i][i].is_zero()) throw std::invalid_argument("pfaffian: nonzero diagonal");
        for (int j = 0; j < k; ++j)
            if (m[i][j] != -m[j][i]) throw std::invalid_argument("pfaffian: not antisymmetric");
    }
    int n = m[0][0].nvars();
    if (k == 0) return Poly::constant(n, Rat(1));
    if (k == 2) return m[0][1];
    Poly acc(n);
    for (int j = 1; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (int r = 1; r < k; ++r) {
            if (r == j) continue;
            std::vector<Poly> row;
            for (int cidx = 1; cidx < k; ++cidx)
                if (cidx != j) row.push_back(m[r][cidx]);
            minor.push_back(row);
        }
        Poly term = m[0][j] * pfaffian(minor);
        acc += (j % 2 == 1) ? term : -term;
    }
    return acc;
}

// Hesse criterion: det Hess P identically zero.
inline bool hesse_test(const Poly& p) {
    int n = p.nvars();
    std::vector<std::vector<Poly>> hess(n, std::vector<Poly>(n, Poly(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) hess[i][j] = p.partial(i).partial(j);
    return poly_det(hess).is_zero();
}

// Sylvester criterion: the partial derivatives are linearly dependent over
// Rat, i.e. P depends on fewer variables after a linear change.
inline bool sylvester_test(const Poly& p) {
    int n = p.nvars();
    std::map<Expo, int> cols;
    std::vector<RatVec> rows(n);
    for (int i = 0; i < n; ++i) {
        Poly pi = p.partial(i);
        for (auto& [e, coef] : pi.terms())
            if (!cols.count(e)) {
                int idx = (int)cols.size();
                cols[e] = idx;
            }
    }
    for (int i = 0; i < n; ++i) {
        rows[i] = RatVec(cols.size(), Rat(0));
        Poly pi = p.partial(i);
        for (auto& [e, coef] : pi.terms()) rows[i][cols[e]] = coef;
    }
    return rank(rows) < n;
}

// All linear fields X with X(P) = 0, by linear solve in the matrix entries.
inline LieSpan annihilator_of_polynomial(const Poly& p) {
    int n = p.nvars();
    std::map<Expo, RatVec> rows;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            Poly contrib = Poly::variable(n, i) * p.partial(j);
            for (auto& [e, coef] : contrib.terms()) {
                auto it = rows.find(e);
                if (it == rows.end()) it = rows.emplace(e, RatVec(n * n, Rat(0))).first;
                it->second[j * n + i] += coef;
            }
        }
    RatMat sys;
    for (auto& [e, v] : rows) sys.push_back(v);
    std::vector<LinField> basis;
    if (sys.empty()) {
        for (int u = 0; u < n * n; ++u) {
            RatVec e(n * n, Rat(0));
            e[u] = 1;
            basis.push_back(unflatten(e, n));
        }
    } else {
        for (auto& v : nullspace(std::move(sys))) basis.push_back(unflatten(v, n));
    }
    return LieSpan::from_fields(basis);
}

// Annihilation of an invariant by every generator of the action.
inline bool annihilates_all(const InducedAction& act, const Poly& inv) {
    for (auto& g : act.rep)
        if (!apply(g.field(), inv).is_zero()) return false;
    return true;
}

}  // namespace lfoliate
