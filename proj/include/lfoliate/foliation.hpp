#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lfoliate/exterior.hpp"
#include "lfoliate/lie.hpp"

namespace lfoliate {

// Homogeneous defining 1-form of a foliation on projective space, reduced so
// that the coefficient gcd is 1 (codim Sing >= 2). nu is the foliation degree
// = coefficient degree - 1.
struct FoliationForm {
    KForm omega;
    Poly extracted_factor;  // the gcd divided out of the raw contraction
    int nu = 0;
};

inline bool check_descent(const KForm& w) {
    return interior(VField::radial(w.nvars()), w).coefficient({}).is_zero();
}

inline bool check_integrable(const KForm& w) { return wedge(w, ext_d(w)).is_zero(); }

// Degree of the foliation defined by a homogeneous gcd-reduced 1-form.
inline int foliation_degree(const KForm& w) {
    auto d = w.homogeneous_coefficient_degree();
    if (!d) throw std::domain_error("foliation_degree: non-homogeneous form");
    return *d - 1;
}

// i_R i_{X_1} ... i_{X_{n-1}} dz_0 ^ ... ^ dz_n, reduced by the coefficient gcd.
inline FoliationForm defining_form(const std::vector<VField>& fields) {
    if (fields.empty()) throw std::invalid_argument("defining_form: no fields");
    int nvars = fields.front().nvars();
    KForm w = volume_form(nvars);
    for (auto it = fields.rbegin(); it != fields.rend(); ++it) w = interior(*it, w);
    w = interior(VField::radial(nvars), w);
    if (w.form_degree() != 1)
        throw std::invalid_argument("defining_form: expected n-1 fields for a 1-form");
    if (w.is_zero())
        throw std::domain_error("defining_form: identically zero contraction");
    FoliationForm out;
    Poly g = w.coefficient_gcd();
    out.extracted_factor = g;
    KForm red(1, nvars);
    for (auto& [idx, c] : w.components()) red.add_term(idx, *exact_div(c, g));
    out.omega = red;
    out.nu = foliation_degree(red);
    if (!check_descent(red)) throw std::domain_error("defining_form: form does not descend");
    if (!check_integrable(red)) throw std::domain_error("defining_form: form is not integrable");
    return out;
}

// All 2x2 coefficient minors vanish identically.
inline bool proportional(const KForm& a, const KForm& b) {
    if (a.nvars() != b.nvars() || a.form_degree() != 1 || b.form_degree() != 1)
        throw std::invalid_argument("proportional: expects 1-forms on the same variables");
    int n = a.nvars();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Poly m = a.coefficient({i}) * b.coefficient({j}) - a.coefficient({j}) * b.coefficient({i});
            if (!m.is_zero()) return false;
        }
    return true;
}

enum class TangentMode { annihilate_omega, annihilate_domega };

// Linear fields X with i_X w = 0 (or i_X dw = 0) as polynomial identities.
inline LieSpan tangent_linear_algebra(const KForm& w, TangentMode mode = TangentMode::annihilate_omega) {
    int n = w.nvars();
    KForm target = (mode == TangentMode::annihilate_domega) ? ext_d(w) : w;
    // unknowns x_{ji}: X_j = sum_i x_{ji} z_i
    // i_X target is linear in the unknowns; collect coefficients per monomial.
    std::map<std::pair<IdxTuple, Expo>, RatVec> rows;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            VField unit(n);
            unit.set_component(j, Poly::variable(n, i));
            KForm contr = interior(unit, target);
            for (auto& [idx, c] : contr.components())
                for (auto& [e, coef] : c.terms()) {
                    auto key = std::make_pair(idx, e);
                    auto it = rows.find(key);
                    if (it == rows.end()) it = rows.emplace(key, RatVec(n * n, Rat(0))).first;
                    it->second[j * n + i] += coef;
                }
        }
    RatMat sys;
    for (auto& [k, v] : rows) sys.push_back(v);
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

inline int pointwise_dimension(const std::vector<VField>& fields, const std::vector<Rat>& pt) {
    if (fields.empty()) return 0;
    int n = fields.front().nvars();
    RatMat m;
    for (auto& f : fields) {
        RatVec row;
        for (int i = 0; i < n; ++i) row.push_back(f.component(i).eval(pt));
        m.push_back(row);
    }
    return rank(std::move(m));
}

inline int pointwise_dimension(const LieSpan& s, const std::vector<Rat>& pt) {
    std::vector<VField> fs;
    for (auto& b : s.basis()) fs.push_back(b.field());
    return pointwise_dimension(fs, pt);
}

// Deterministic point schedule: (1,2,3,5,7,...), (1,-2,3,-5,...), (2,3,5,7,...).
inline std::vector<std::vector<Rat>> generic_point_schedule(int n) {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
    std::vector<Rat> p1, p2, p3;
    for (int i = 0; i < n; ++i) {
        long v = i == 0 ? 1 : primes[i - 1];
        p1.push_back(Rat(v));
        p2.push_back(Rat(i % 2 == 1 ? -v : v));
        p3.push_back(Rat(primes[i]));
    }
    return {p1, p2, p3};
}

template <typename SpanOrFields>
inline int generic_dimension(const SpanOrFields& s, int nvars) {
    int best = 0;
    for (auto& pt : generic_point_schedule(nvars)) best = std::max(best, pointwise_dimension(s, pt));
    return best;
}

// P dw = dP ^ w, the cleared form of "w/P is closed".
inline bool integrating_factor_check(const KForm& w, const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("integrating_factor_check: zero polynomial");
    return (p * ext_d(w) - wedge(d_of(p), w)).is_zero();
}

// X is a symmetry: not tangent (i_X w != 0) and (L_X w) ^ w = 0. Then i_X w
// must be an integrating factor; we assert that consequence.
inline bool symmetry_check(const KForm& w, const VField& x) {
    Poly ix = interior(x, w).coefficient({});
    if (ix.is_zero()) return false;
    if (!wedge(lie_derivative(x, w), w).is_zero()) return false;
    if (!integrating_factor_check(w, ix))
        throw std::logic_error("symmetry_check: i_X w failed the integrating-factor identity");
    return true;
}

// Symbolic first integral Prod P_k^{lambda_k} * exp(H/K), held via its
// logarithmic derivative data. K = 1 (empty) means no exponential part.
struct LogExpIntegral {
    int nvars = 0;
    std::vector<std::pair<Poly, Rat>> log_part;  // (P_k, lambda_k), lambda_k != 0
    Poly exp_num;                                // H
    Poly exp_den;                                // K
    bool has_exp = false;

    static LogExpIntegral pure_log(std::vector<std::pair<Poly, Rat>> parts) {
        LogExpIntegral f;
        if (parts.empty()) throw std::invalid_argument("LogExpIntegral: empty");
        f.nvars = parts.front().first.nvars();
        f.log_part = std::move(parts);
        f.exp_num = Poly(f.nvars);
        f.exp_den = Poly::constant(f.nvars, Rat(1));
        return f;
    }
    static LogExpIntegral with_exp(std::vector<std::pair<Poly, Rat>> parts, Poly h, Poly k) {
        LogExpIntegral f;
        f.nvars = h.nvars();
        f.log_part = std::move(parts);
        f.exp_num = std::move(h);
        f.exp_den = std::move(k);
        f.has_exp = true;
        if (f.exp_den.is_zero()) throw std::invalid_argument("LogExpIntegral: zero denominator");
        return f;
    }

    // Sum lambda_k deg P_k == 0 and deg H == deg K (projective balance).
    bool is_projective() const {
        Rat acc(0);
        for (auto& [p, l] : log_part) {
            auto d = p.is_homogeneous();
            if (!d) return false;
            acc += l * Rat(*d);
        }
        if (acc != 0) return false;
        if (has_exp && !exp_num.is_zero()) {
            auto dh = exp_num.is_homogeneous(), dk = exp_den.is_homogeneous();
            if (!dh || !dk || *dh != *dk) return false;
        }
        return true;
    }

    void validate_coprime() const {
        for (size_t i = 0; i < log_part.size(); ++i)
            for (size_t j = i + 1; j < log_part.size(); ++j)
                if (!poly_gcd(log_part[i].first, log_part[j].first).is_constant())
                    throw std::domain_error("LogExpIntegral: log factors are not pairwise coprime");
    }
};

// Cleared polynomial 1-form of dlog F: K^2 * Prod P_k * dlog F, gcd-reduced.
inline KForm integral_to_form(const LogExpIntegral& f) {
    f.validate_coprime();
    int n = f.nvars;
    // clear rational lambdas
    mpz_class denlcm(1);
    for (auto& [p, l] : f.log_part) {
        mpz_class d = l.get_den();
        denlcm = denlcm / gcd(denlcm, d) * d;
    }
    Poly prodP = Poly::constant(n, Rat(1));
    for (auto& [p, l] : f.log_part) prodP *= p;
    const Poly& K = f.exp_den;
    const Poly& H = f.exp_num;
    Poly K2 = K * K;
    KForm w(1, n);
    for (size_t k = 0; k < f.log_part.size(); ++k) {
        Poly rest = Poly::constant(n, Rat(1));
        for (size_t j = 0; j < f.log_part.size(); ++j)
            if (j != k) rest *= f.log_part[j].first;
        Rat lam = f.log_part[k].second * Rat(denlcm);
        w += (lam * (rest * K2)) * d_of(f.log_part[k].first);
    }
    if (f.has_exp) w += Rat(denlcm) * (prodP * (K * d_of(H) - H * d_of(K)));
    if (w.is_zero()) return w;
    Poly g = w.coefficient_gcd();
    KForm red(1, n);
    for (auto& [idx, c] : w.components()) red.add_term(idx, *exact_div(c, g));
    return red;
}

// For each field X, the cleared identity
//   sum_k lambda_k X(P_k) K^2 Prod_{j!=k} P_j + Prod P_k (K X(H) - H X(K)) = 0.
inline Poly first_integral_residual(const LogExpIntegral& f, const VField& x) {
    int n = f.nvars;
    mpz_class denlcm(1);
    for (auto& [p, l] : f.log_part) {
        mpz_class d = l.get_den();
        denlcm = denlcm / gcd(denlcm, d) * d;
    }
    Poly prodP = Poly::constant(n, Rat(1));
    for (auto& [p, l] : f.log_part) prodP *= p;
    const Poly& K = f.exp_den;
    const Poly& H = f.exp_num;
    Poly res(n);
    for (size_t k = 0; k < f.log_part.size(); ++k) {
        Poly rest = Poly::constant(n, Rat(1));
        for (size_t j = 0; j < f.log_part.size(); ++j)
            if (j != k) rest *= f.log_part[j].first;
        Rat lam = f.log_part[k].second * Rat(denlcm);
        res += lam * (apply(x, f.log_part[k].first) * rest * K * K);
    }
    res += Rat(denlcm) * (prodP * (K * apply(x, H) - H * apply(x, K)));
    return res;
}

inline bool verify_first_integral(const LogExpIntegral& f, const std::vector<VField>& fields) {
    for (auto& x : fields)
        if (!first_integral_residual(f, x).is_zero()) return false;
    return true;
}

// Glue closed rational blocks on disjoint variable groups:
// Omega = cleared sum mu_k (w_k / P_k). Descent holds iff
// sum mu_k * (i_{R_k} w_k / P_k) = 0, with each quotient a constant here.
struct LogBlock {
    KForm omega;        // block 1-form on the full variable set
    Poly factor;        // P_k = i_{X_k} w_k for a declared symmetry
    Rat mu;             // gluing weight
    std::vector<int> group;  // variable indices of the block
};

inline KForm assemble_log_combination(const std::vector<LogBlock>& parts) {
    if (parts.empty()) throw std::invalid_argument("assemble_log_combination: empty");
    int n = parts.front().omega.nvars();
    std::vector<int> seen(n, 0);
    for (auto& b : parts)
        for (int v : b.group) {
            if (seen[v]++) throw std::invalid_argument("assemble_log_combination: overlapping groups");
        }
    // Verified descent condition: each i_{R_k} w_k / P_k must be constant.
    Rat acc(0);
    for (auto& b : parts) {
        VField rk(n);
        for (int v : b.group) rk.set_component(v, Poly::variable(n, v));
        Poly num = interior(rk, b.omega).coefficient({});
        auto q = exact_div(num, b.factor);
        if (!q || !q->is_constant())
            throw std::domain_error("assemble_log_combination: i_R w / P is not constant");
        acc += b.mu * q->constant_value();
    }
    KForm w(1, n);
    for (size_t k = 0; k < parts.size(); ++k) {
        Poly rest = Poly::constant(n, Rat(1));
        for (size_t j = 0; j < parts.size(); ++j)
            if (j != k) rest *= parts[j].factor;
        w += (parts[k].mu * rest) * parts[k].omega;
    }
    if (acc == 0 && !check_descent(w))
        throw std::logic_error("assemble_log_combination: descent condition violated");
    return w;
}

// Omega = i_R(dz_0 ^ ... ^ dz_p): the degree-0 codimension-p form.
inline KForm radial_codim_p_form(int p, int n) {
    if (p < 1 || p >= n) throw std::invalid_argument("radial_codim_p_form: need 1 <= p < n");
    int nvars = n + 1;
    IdxTuple idx;
    for (int i = 0; i <= p; ++i) idx.push_back(i);
    return interior(VField::radial(nvars), KForm::basis(nvars, idx));
}

// Annihilator report for the codim-p form: which of the candidate tangent
// fields contract to zero.
struct CodimPReport {
    bool shifts_ok = false;       // z_j d/dz_l for l >= p+1, all j
    bool block_radial_ok = false; // sum_{i<=p} z_i d/dz_i
    bool rij_all_ok = false;      // z_i d/dz_i + z_j d/dz_j, i<j<=p (the source's claim)
    int generic_tangent_dim = 0;  // pointwise dimension of the verified annihilators
};

inline CodimPReport radial_codim_p_check(int p, int n) {
    KForm w = radial_codim_p_form(p, n);
    int nvars = n + 1;
    CodimPReport rep;
    std::vector<VField> annihilators;
    rep.shifts_ok = true;
    for (int l = p + 1; l <= n; ++l)
        for (int j = 0; j <= n; ++j) {
            VField x(nvars);
            x.set_component(l, Poly::variable(nvars, j));
            if (!interior(x, w).is_zero()) rep.shifts_ok = false;
            annihilators.push_back(x);
        }
    VField br(nvars);
    for (int i = 0; i <= p; ++i) br.set_component(i, Poly::variable(nvars, i));
    rep.block_radial_ok = interior(br, w).is_zero();
    if (rep.block_radial_ok) annihilators.push_back(br);
    rep.rij_all_ok = true;
    for (int i = 0; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
            VField x(nvars);
            x.set_component(i, Poly::variable(nvars, i));
            x.set_component(j, Poly::variable(nvars, j));
            if (!interior(x, w).is_zero()) rep.rij_all_ok = false;
        }
    rep.generic_tangent_dim = generic_dimension(annihilators, nvars);
    return rep;
}

}  // namespace lfoliate
