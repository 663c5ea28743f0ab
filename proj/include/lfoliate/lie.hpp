#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lfoliate/exterior.hpp"
#include "lfoliate/linalg.hpp"

namespace lfoliate {

inline RatVec flatten(const LinField& x) {
    RatVec v;
    for (auto& row : x.matrix())
        for (auto& e : row) v.push_back(e);
    return v;
}

inline LinField unflatten(const RatVec& v, int n) {
    RatMat m = mat_zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = v[i * n + j];
    return LinField(m);
}

// Span of linear fields, reduced to an echelonized basis of coefficient
// vectors in Rat^{(n+1)^2}.
class LieSpan {
public:
    LieSpan() : nvars_(0) {}
    explicit LieSpan(int nvars) : nvars_(nvars) {}

    static LieSpan from_fields(const std::vector<LinField>& fields) {
        if (fields.empty()) return LieSpan();
        LieSpan s(fields.front().nvars());
        RatMat rows;
        for (auto& f : fields) {
            if (f.nvars() != s.nvars_) throw std::invalid_argument("LieSpan: variable-count mismatch");
            rows.push_back(flatten(f));
        }
        rows = row_basis(std::move(rows));
        for (auto& r : rows) s.basis_.push_back(unflatten(r, s.nvars_));
        return s;
    }

    int nvars() const { return nvars_; }
    int dimension() const { return (int)basis_.size(); }
    const std::vector<LinField>& basis() const { return basis_; }

    RatMat basis_rows() const {
        RatMat rows;
        for (auto& b : basis_) rows.push_back(flatten(b));
        return rows;
    }

    bool contains(const LinField& x) const { return in_row_span(basis_rows(), flatten(x)); }

    std::optional<RatVec> coordinates(const LinField& x) const {
        return coordinates_in(basis_rows(), flatten(x));
    }

private:
    int nvars_;
    std::vector<LinField> basis_;
};

inline LieSpan reduce_span(const std::vector<LinField>& fields) { return LieSpan::from_fields(fields); }

// Structure constants: brackets of basis pairs expanded in the basis.
struct StructureConstants {
    bool closed = true;
    // c[{i,j}] = coordinates of [b_i, b_j]; absent when outside the span.
    std::map<std::pair<int, int>, RatVec> table;
};

inline StructureConstants structure_constants(const LieSpan& s) {
    StructureConstants sc;
    for (int i = 0; i < s.dimension(); ++i)
        for (int j = i + 1; j < s.dimension(); ++j) {
            LinField br = lin_bracket(s.basis()[i], s.basis()[j]);
            auto co = s.coordinates(br);
            if (!co) {
                sc.closed = false;
            } else {
                sc.table[{i, j}] = *co;
            }
        }
    return sc;
}

inline bool is_bracket_closed(const LieSpan& s) { return structure_constants(s).closed; }

// Derived algebra [s,s] as a span.
inline LieSpan derived_algebra(const LieSpan& s) {
    std::vector<LinField> brs;
    for (int i = 0; i < s.dimension(); ++i)
        for (int j = i + 1; j < s.dimension(); ++j)
            brs.push_back(lin_bracket(s.basis()[i], s.basis()[j]));
    if (brs.empty()) return LieSpan(s.nvars());
    return LieSpan::from_fields(brs);
}

// Dimensions of g, [g,g], ... until stabilization.
inline std::vector<int> derived_series(const LieSpan& s) {
    if (!is_bracket_closed(s)) throw std::domain_error("derived_series: span is not bracket-closed");
    std::vector<int> dims{s.dimension()};
    LieSpan g = s;
    while (true) {
        LieSpan h = derived_algebra(g);
        dims.push_back(h.dimension());
        if (h.dimension() == g.dimension() || h.dimension() == 0) break;
        g = h;
    }
    return dims;
}

inline bool is_solvable(const LieSpan& s) { return derived_series(s).back() == 0; }

inline bool element_is_nilpotent(const LinField& x) {
    int n = x.nvars();
    RatMat p = x.matrix();
    for (int k = 1; k < n; ++k) p = mat_mul(p, x.matrix());
    return mat_is_zero(p);
}

// Minimal polynomial of the matrix, as a univariate Poly (1 variable).
inline Poly minimal_polynomial(const LinField& x) {
    int n = x.nvars();
    std::vector<RatMat> powers{mat_identity(n)};
    RatMat rows;
    auto push_flat = [&](const RatMat& m) {
        RatVec v;
        for (auto& row : m)
            for (auto& e : row) v.push_back(e);
        rows.push_back(v);
    };
    push_flat(powers[0]);
    for (int k = 1; k <= n; ++k) {
        powers.push_back(mat_mul(powers.back(), x.matrix()));
        push_flat(powers.back());
        // Look for coefficients c with A^k = sum_{i<k} c_i A^i.
        RatMat sys = mat_zero(n * n, k);
        for (int col = 0; col < k; ++col)
            for (int idx = 0; idx < n * n; ++idx) sys[idx][col] = rows[col][idx];
        RatVec target = rows[k];
        auto sol = solve(sys, target);
        if (sol) {
            Poly m(1);
            m.add_term({k}, Rat(1));
            for (int i = 0; i < k; ++i) m.add_term({i}, -(*sol)[i]);
            return m;
        }
    }
    throw std::logic_error("minimal_polynomial: no relation up to degree n");
}

// Semisimple over C iff the minimal polynomial over Q is squarefree.
inline bool element_is_semisimple(const LinField& x) {
    Poly m = minimal_polynomial(x);
    Poly dm = m.partial(0);
    Poly g = poly_gcd(m, dm);
    return g.is_constant();
}

// ---- linear bracket equations ----

struct BracketSolution {
    bool feasible = false;
    LinField particular;           // valid when feasible
    std::vector<LinField> kernel;  // homogeneous solution basis
    int dimension() const { return feasible ? (int)kernel.size() : -1; }
};

// All X with [X, B_i] = C_i for every constraint, X ranging over all matrices
// or over an ambient span when given. The bracket is the field bracket
// ([X,B] has matrix mat(B)mat(X) - mat(X)mat(B)).
inline BracketSolution solve_bracket_system(
    const std::vector<std::pair<LinField, LinField>>& constraints,
    const LieSpan* ambient = nullptr) {
    if (constraints.empty()) throw std::invalid_argument("solve_bracket_system: no constraints");
    int n = constraints.front().first.nvars();
    int unknowns = ambient ? ambient->dimension() : n * n;

    // Unit unknown -> matrix of the corresponding field.
    auto unit_field = [&](int u) {
        if (!ambient) {
            RatVec e(n * n, Rat(0));
            e[u] = 1;
            return unflatten(e, n);
        }
        return ambient->basis()[u];
    };

    RatMat sys;
    RatVec rhs;
    for (auto& [b, c] : constraints) {
        size_t base = sys.size();
        RatVec crow = flatten(c);
        for (int r = 0; r < n * n; ++r) {
            sys.push_back(RatVec(unknowns, Rat(0)));
            rhs.push_back(crow[r]);
        }
        for (int u = 0; u < unknowns; ++u) {
            RatVec col = flatten(lin_bracket(unit_field(u), b));
            for (int r = 0; r < n * n; ++r) sys[base + r][u] = col[r];
        }
    }

    BracketSolution out;
    auto part = solve(sys, rhs);
    if (!part) return out;
    out.feasible = true;
    auto to_field = [&](const RatVec& v) {
        if (!ambient) return unflatten(v, n);
        RatMat m = mat_zero(n, n);
        for (int k = 0; k < ambient->dimension(); ++k) {
            const auto& bm = ambient->basis()[k].matrix();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[i][j] += v[k] * bm[i][j];
        }
        return LinField(m);
    };
    out.particular = to_field(*part);
    for (auto& v : nullspace(sys)) out.kernel.push_back(to_field(v));
    return out;
}

// ---- presentations ----

enum class PresentationName { abelian, affine2, L_alpha, heis, aff_split, shear, sl2 };

inline std::string to_string(PresentationName p) {
    switch (p) {
        case PresentationName::abelian: return "abelian";
        case PresentationName::affine2: return "affine2";
        case PresentationName::L_alpha: return "L_alpha";
        case PresentationName::heis: return "heis";
        case PresentationName::aff_split: return "aff_split";
        case PresentationName::shear: return "shear";
        case PresentationName::sl2: return "sl2";
    }
    return "?";
}

inline std::optional<PresentationName> presentation_from_string(const std::string& s) {
    for (auto p : {PresentationName::abelian, PresentationName::affine2, PresentationName::L_alpha,
                   PresentationName::heis, PresentationName::aff_split, PresentationName::shear,
                   PresentationName::sl2})
        if (to_string(p) == s) return p;
    return std::nullopt;
}

struct PresentationMatch {
    bool matches = false;
    PresentationName detected = PresentationName::abelian;
    // For L_alpha: the scale invariant s = tr^2/det of ad_X on [g,g];
    // s = (alpha+1)^2/alpha determines the unordered pair {alpha, 1/alpha}.
    std::optional<Rat> alpha_invariant;
    std::vector<LinField> witness;
    std::string detail;
};

// ad_x restricted to the derived algebra, in the derived basis.
inline std::optional<RatMat> ad_on(const LieSpan& sub, const LinField& x) {
    int k = sub.dimension();
    RatMat m = mat_zero(k, k);
    for (int j = 0; j < k; ++j) {
        LinField br = lin_bracket(x, sub.basis()[j]);
        auto co = sub.coordinates(br);
        if (!co) return std::nullopt;
        for (int i = 0; i < k; ++i) m[i][j] = (*co)[i];
    }
    return m;
}

// Decide which presentation a bracket-closed span realizes. Dispatch is by
// dim[g,g] as in the source classification; L_alpha is reported through the
// {alpha, 1/alpha}-invariant.
inline PresentationMatch classify_presentation(const LieSpan& g) {
    PresentationMatch out;
    if (!is_bracket_closed(g)) {
        out.detail = "span is not bracket-closed";
        return out;
    }
    LieSpan der = derived_algebra(g);
    int d = g.dimension(), dd = der.dimension();

    if (d == 2) {
        if (dd == 0) {
            out.matches = true;
            out.detected = PresentationName::abelian;
            out.witness = g.basis();
            return out;
        }
        // [X,Y] = Y after rescaling: derived algebra is 1-dimensional.
        out.matches = true;
        out.detected = PresentationName::affine2;
        LinField w = der.basis()[0];
        // find X with [X, w] = w within g
        auto sol = solve_bracket_system({{w, w}}, &g);
        if (sol.feasible) out.witness = {sol.particular, w};
        return out;
    }

    if (d == 3) {
        if (dd == 0) {
            out.matches = true;
            out.detected = PresentationName::abelian;
            out.witness = g.basis();
            return out;
        }
        if (dd == 3) {
            out.matches = true;
            out.detected = PresentationName::sl2;
            out.witness = g.basis();
            return out;
        }
        if (dd == 1) {
            // heis when [g, g'] = 0, aff_split otherwise.
            LinField w = der.basis()[0];
            bool central = true;
            for (auto& b : g.basis())
                if (!lin_bracket(b, w).field().is_zero()) central = false;
            out.matches = true;
            out.detected = central ? PresentationName::heis : PresentationName::aff_split;
            return out;
        }
        if (dd == 2) {
            // complement element X of g': complete the derived basis inside g.
            RatMat dbasis = der.basis_rows();
            std::optional<LinField> x;
            for (auto& b : g.basis())
                if (!in_row_span(dbasis, flatten(b))) {
                    x = b;
                    break;
                }
            if (!x) {
                out.detail = "derived algebra not complemented";
                return out;
            }
            auto ad = ad_on(der, *x);
            if (!ad) {
                out.detail = "[X, g'] leaves g'";
                return out;
            }
            Rat tr = (*ad)[0][0] + (*ad)[1][1];
            Rat det = (*ad)[0][0] * (*ad)[1][1] - (*ad)[0][1] * (*ad)[1][0];
            if (det == 0) {
                out.detail = "ad_X singular on [g,g] (alpha = 0 degenerate)";
                return out;
            }
            // shear <=> ad_X - (tr/2) Id nilpotent nonzero
            RatMat nil = *ad;
            nil[0][0] -= tr / 2;
            nil[1][1] -= tr / 2;
            bool nil_zero = mat_is_zero(nil);
            bool nil_nilpotent = mat_is_zero(mat_mul(nil, nil));
            out.matches = true;
            if (!nil_zero && nil_nilpotent) {
                out.detected = PresentationName::shear;
            } else {
                out.detected = PresentationName::L_alpha;
                out.alpha_invariant = tr * tr / det;
                out.witness = {*x, der.basis()[0], der.basis()[1]};
            }
            return out;
        }
    }
    out.detail = "no presentation rule for dimension " + std::to_string(d);
    return out;
}

// Does the span realize the named presentation (with optional L_alpha value)?
inline PresentationMatch matches_presentation(const LieSpan& g, PresentationName name,
                                              std::optional<Rat> alpha = std::nullopt) {
    PresentationMatch got = classify_presentation(g);
    if (!got.matches) return got;
    PresentationMatch out = got;
    bool name_ok = got.detected == name;
    if (name == PresentationName::abelian && got.detected == PresentationName::abelian) name_ok = true;
    out.matches = name_ok;
    if (name_ok && name == PresentationName::L_alpha && alpha) {
        if (*alpha == 0) {
            out.matches = false;
            out.detail = "alpha must be nonzero";
            return out;
        }
        Rat expect = (*alpha + 1) * (*alpha + 1) / *alpha;
        if (!got.alpha_invariant || *got.alpha_invariant != expect) {
            out.matches = false;
            std::ostringstream os;
            os << "alpha invariant mismatch: got "
               << (got.alpha_invariant ? to_string(*got.alpha_invariant) : std::string("none"))
               << ", expected " << to_string(expect);
            out.detail = os.str();
        }
    }
    if (!name_ok)
        out.detail = "detected presentation " + to_string(got.detected) + " != requested " +
                     to_string(name);
    return out;
}

// Text rendering of structure constants for reports.
inline std::string render_structure_constants(const LieSpan& s) {
    StructureConstants sc = structure_constants(s);
    std::ostringstream os;
    for (auto& [ij, co] : sc.table) {
        os << "[b" << ij.first << ",b" << ij.second << "] =";
        bool any = false;
        for (size_t k = 0; k < co.size(); ++k) {
            if (co[k] == 0) continue;
            os << " " << (co[k] > 0 && any ? "+" : "") << to_string(co[k]) << "*b" << k;
            any = true;
        }
        if (!any) os << " 0";
        os << "\n";
    }
    if (!sc.closed) os << "(not closed)\n";
    return os.str();
}

}  // namespace lfoliate
