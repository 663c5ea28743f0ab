#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "lfoliate/gcd.hpp"
#include "lfoliate/poly.hpp"

namespace lfoliate {

using IdxTuple = std::vector<int>;  // strictly increasing variable indices

// Exterior k-form with Poly coefficients, indexed by strictly increasing
// tuples. A 0-form is a single Poly stored under the empty tuple.
class KForm {
public:
    KForm() : k_(0), nvars_(0) {}
    // Degrees above nvars are allowed; such forms are identically zero.
    KForm(int k, int nvars) : k_(k), nvars_(nvars) {
        if (k < 0) throw std::invalid_argument("KForm: negative degree");
    }
    static KForm zero(int k, int nvars) { return KForm(k, nvars); }
    static KForm from_poly(const Poly& p) {
        KForm f(0, p.nvars());
        if (!p.is_zero()) f.comps_[{}] = p;
        return f;
    }
    // dz_{i1} ^ ... ^ dz_{ik} for strictly increasing indices.
    static KForm basis(int nvars, const IdxTuple& idx) {
        KForm f((int)idx.size(), nvars);
        f.add_term(idx, Poly::constant(nvars, Rat(1)));
        return f;
    }

    int form_degree() const { return k_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<IdxTuple, Poly>& components() const { return comps_; }

    Poly coefficient(const IdxTuple& idx) const {
        auto it = comps_.find(idx);
        return it == comps_.end() ? Poly(nvars_) : it->second;
    }

    // Insert c * dz_idx where idx need not be sorted; sign bookkeeping happens here.
    KForm& add_term(IdxTuple idx, const Poly& c) {
        if ((int)idx.size() != k_) throw std::invalid_argument("KForm::add_term: wrong tuple length");
        if (c.is_zero()) return *this;
        int sign = 1;
        for (size_t i = 0; i + 1 < idx.size(); ++i)  // insertion sort, counting swaps
            for (size_t j = 0; j + 1 < idx.size() - i; ++j)
                if (idx[j] > idx[j + 1]) {
                    std::swap(idx[j], idx[j + 1]);
                    sign = -sign;
                }
        for (size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] == idx[i + 1]) return *this;  // repeated factor
        for (int i : idx)
            if (i < 0 || i >= nvars_) throw std::out_of_range("KForm::add_term: index out of range");
        Poly add = sign > 0 ? c : -c;
        auto it = comps_.find(idx);
        if (it == comps_.end()) {
            comps_[idx] = add;
        } else {
            it->second += add;
            if (it->second.is_zero()) comps_.erase(it);
        }
        return *this;
    }

    friend KForm operator+(const KForm& a, const KForm& b) {
        a.check_compatible(b);
        KForm r = a;
        for (auto& [i, c] : b.comps_) r.add_term(i, c);
        return r;
    }
    friend KForm operator-(const KForm& a, const KForm& b) {
        a.check_compatible(b);
        KForm r = a;
        for (auto& [i, c] : b.comps_) r.add_term(i, -c);
        return r;
    }
    friend KForm operator-(const KForm& a) {
        KForm r(a.k_, a.nvars_);
        for (auto& [i, c] : a.comps_) r.comps_[i] = -c;
        return r;
    }
    friend KForm operator*(const Poly& p, const KForm& a) {
        KForm r(a.k_, a.nvars_);
        for (auto& [i, c] : a.comps_) {
            Poly pc = p * c;
            if (!pc.is_zero()) r.comps_[i] = pc;
        }
        return r;
    }
    friend KForm operator*(const Rat& s, const KForm& a) {
        return Poly::constant(a.nvars_, s) * a;
    }
    KForm& operator+=(const KForm& b) { return *this = *this + b; }
    KForm& operator-=(const KForm& b) { return *this = *this - b; }

    friend bool operator==(const KForm& a, const KForm& b) {
        return a.k_ == b.k_ && a.nvars_ == b.nvars_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

    // Common total degree of all coefficients, or nullopt if mixed.
    std::optional<int> homogeneous_coefficient_degree() const {
        std::optional<int> d;
        for (auto& [i, c] : comps_) {
            auto h = c.is_homogeneous();
            if (!h) return std::nullopt;
            if (c.is_zero()) continue;
            if (!d)
                d = *h;
            else if (*d != *h)
                return std::nullopt;
        }
        return d ? d : std::optional<int>(0);
    }

    Poly coefficient_gcd() const {
        Poly g(nvars_);
        for (auto& [i, c] : comps_) g = poly_gcd(g, c);
        return g;
    }

    // Restriction to the affine chart var=1: substitute in coefficients and
    // drop every term containing dz_var.
    KForm chart(int var) const {
        KForm r(k_, nvars_);
        for (auto& [i, c] : comps_) {
            if (std::find(i.begin(), i.end(), var) != i.end()) continue;
            r.add_term(i, c.substitute(var, Rat(1)));
        }
        return r;
    }

private:
    void check_compatible(const KForm& b) const {
        if (nvars_ != b.nvars_) throw std::invalid_argument("KForm: variable-count mismatch");
        if (k_ != b.k_) throw std::invalid_argument("KForm: degree mismatch");
    }

    int k_, nvars_;
    std::map<IdxTuple, Poly> comps_;
};

// Polynomial vector field sum A_i d/dz_i.
class VField {
public:
    VField() = default;
    explicit VField(int nvars) : comps_(nvars, Poly(nvars)) {}
    explicit VField(std::vector<Poly> comps) : comps_(std::move(comps)) {
        for (auto& c : comps_)
            if (c.nvars() != (int)comps_.size())
                throw std::invalid_argument("VField: component count must equal variable count");
    }
    static VField radial(int nvars) {
        VField x(nvars);
        for (int i = 0; i < nvars; ++i) x.comps_[i] = Poly::variable(nvars, i);
        return x;
    }

    int nvars() const { return (int)comps_.size(); }
    const Poly& component(int i) const { return comps_.at(i); }
    void set_component(int i, const Poly& p) {
        if (p.nvars() != nvars()) throw std::invalid_argument("VField: bad component ring");
        comps_.at(i) = p;
    }
    bool is_zero() const {
        for (auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }
    friend bool operator==(const VField& a, const VField& b) { return a.comps_ == b.comps_; }

    friend VField operator+(const VField& a, const VField& b) {
        if (a.nvars() != b.nvars()) throw std::invalid_argument("VField: variable-count mismatch");
        VField r(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) r.comps_[i] = a.comps_[i] + b.comps_[i];
        return r;
    }
    friend VField operator-(const VField& a, const VField& b) {
        if (a.nvars() != b.nvars()) throw std::invalid_argument("VField: variable-count mismatch");
        VField r(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) r.comps_[i] = a.comps_[i] - b.comps_[i];
        return r;
    }
    friend VField operator*(const Rat& s, const VField& a) {
        VField r(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) r.comps_[i] = s * a.comps_[i];
        return r;
    }

private:
    std::vector<Poly> comps_;
};

// Directional derivative sum A_i dp/dz_i.
inline Poly apply(const VField& x, const Poly& p) {
    if (x.nvars() != p.nvars()) throw std::invalid_argument("apply: variable-count mismatch");
    Poly r(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) r += x.component(i) * p.partial(i);
    return r;
}

// Lie bracket [X,Y]_j = X(Y_j) - Y(X_j). For linear fields with matrices A, B
// (X = sum (Az)_j d/dz_j) this corresponds to the matrix BA - AB.
inline VField bracket(const VField& x, const VField& y) {
    if (x.nvars() != y.nvars()) throw std::invalid_argument("bracket: variable-count mismatch");
    VField r(x.nvars());
    for (int j = 0; j < x.nvars(); ++j)
        r.set_component(j, apply(x, y.component(j)) - apply(y, x.component(j)));
    return r;
}

// Interior product (contraction in the first slot).
inline KForm interior(const VField& x, const KForm& a) {
    if (x.nvars() != a.nvars()) throw std::invalid_argument("interior: variable-count mismatch");
    if (a.form_degree() == 0) throw std::domain_error("interior: contraction of a 0-form");
    KForm r(a.form_degree() - 1, a.nvars());
    for (auto& [idx, c] : a.components()) {
        for (size_t t = 0; t < idx.size(); ++t) {
            IdxTuple rest;
            for (size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            Poly coeff = c * x.component(idx[t]);
            if (t % 2 == 1) coeff = -coeff;
            r.add_term(rest, coeff);
        }
    }
    return r;
}

// Exterior derivative.
inline KForm ext_d(const KForm& a) {
    KForm r(a.form_degree() + 1, a.nvars());
    for (auto& [idx, c] : a.components()) {
        for (int j = 0; j < a.nvars(); ++j) {
            Poly pj = c.partial(j);
            if (pj.is_zero()) continue;
            IdxTuple e;
            e.push_back(j);
            for (int i : idx) e.push_back(i);
            r.add_term(e, pj);
        }
    }
    return r;
}

inline KForm wedge(const KForm& a, const KForm& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("wedge: variable-count mismatch");
    int k = a.form_degree() + b.form_degree();
    KForm r(k, a.nvars());
    for (auto& [ia, ca] : a.components())
        for (auto& [ib, cb] : b.components()) {
            IdxTuple e = ia;
            e.insert(e.end(), ib.begin(), ib.end());
            r.add_term(e, ca * cb);
        }
    return r;
}

// Cartan formula L_X a = i_X(da) + d(i_X a).
inline KForm lie_derivative(const VField& x, const KForm& a) {
    KForm da = ext_d(a);
    KForm part1 = interior(x, da);
    if (a.form_degree() == 0) return part1;
    return part1 + ext_d(interior(x, a));
}

// dz_0 ^ ... ^ dz_{n}: the volume form.
inline KForm volume_form(int nvars) {
    IdxTuple all(nvars);
    for (int i = 0; i < nvars; ++i) all[i] = i;
    return KForm::basis(nvars, all);
}

// Exterior derivative of a polynomial as a 1-form.
inline KForm d_of(const Poly& p) { return ext_d(KForm::from_poly(p)); }

// Linear vector field together with its matrix: X = sum_j (A z)_j d/dz_j.
class LinField {
public:
    LinField() = default;
    explicit LinField(const std::vector<std::vector<Rat>>& m) : mat_(m), field_((int)m.size()) {
        int n = (int)m.size();
        for (auto& row : m)
            if ((int)row.size() != n) throw std::invalid_argument("LinField: matrix not square");
        for (int j = 0; j < n; ++j) {
            Poly c(n);
            for (int i = 0; i < n; ++i)
                if (m[j][i] != 0) c += m[j][i] * Poly::variable(n, i);
            field_.set_component(j, c);
        }
    }
    static std::optional<LinField> from_field(const VField& x) {
        int n = x.nvars();
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        for (int j = 0; j < n; ++j) {
            const Poly& c = x.component(j);
            for (auto& [e, coef] : c.terms()) {
                if (total_degree(e) != 1) return std::nullopt;
                for (int i = 0; i < n; ++i)
                    if (e[i] == 1) m[j][i] = coef;
            }
        }
        return LinField(m);
    }

    int nvars() const { return (int)mat_.size(); }
    const std::vector<std::vector<Rat>>& matrix() const { return mat_; }
    const VField& field() const { return field_; }
    operator const VField&() const { return field_; }

    friend bool operator==(const LinField& a, const LinField& b) { return a.mat_ == b.mat_; }

private:
    std::vector<std::vector<Rat>> mat_;
    VField field_;
};

inline LinField lin_bracket(const LinField& x, const LinField& y) {
    // matrix of [X,Y] is BA - AB
    int n = x.nvars();
    const auto& a = x.matrix();
    const auto& b = y.matrix();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat s(0);
            for (int k = 0; k < n; ++k) s += b[i][k] * a[k][j] - a[i][k] * b[k][j];
            m[i][j] = s;
        }
    return LinField(m);
}

// --- rendering ---

inline std::string render(const VField& x, const std::vector<std::string>* names = nullptr) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < x.nvars(); ++i) {
        const Poly& c = x.component(i);
        if (c.is_zero()) continue;
        bool neg = render(c, names)[0] == '-';
        std::string cs = render(neg ? -c : c, names);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string var = names ? (*names)[i] : default_var_name(i);
        if (cs == "1")
            os << "d/d" << var;
        else if (c.term_count() == 1)
            os << cs << " d/d" << var;
        else
            os << "(" << cs << ") d/d" << var;
    }
    if (first) return "0";
    return os.str();
}

inline std::string render(const KForm& a, const std::vector<std::string>* names = nullptr) {
    if (a.is_zero()) return "0";
    if (a.form_degree() == 0) return "(" + render(a.coefficient({}), names) + ")";
    std::ostringstream os;
    bool first = true;
    for (auto& [idx, c] : a.components()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << render(c, names) << ")*";
        bool fd = true;
        for (int i : idx) {
            if (!fd) os << "^";
            fd = false;
            os << "d" << (names ? (*names)[i] : default_var_name(i));
        }
    }
    return os.str();
}

}  // namespace lfoliate
