#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfoliate/rat.hpp"

namespace lfoliate {

using Expo = std::vector<int>;  // one exponent per variable, all >= 0

inline int total_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic: higher total degree first, ties broken by plain lex.
inline bool grlex_less(const Expo& a, const Expo& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

// Sparse multivariate polynomial over Rat in a fixed number of variables.
// Invariant: no zero coefficients are stored, all exponent vectors have
// length nvars(). Equality is term-map equality.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("Poly: negative variable count");
    }

    static Poly constant(int nvars, const Rat& c) {
        Poly p(nvars);
        if (c != 0) p.terms_[Expo(nvars, 0)] = c;
        return p;
    }
    static Poly variable(int nvars, int i, int power = 1) {
        if (i < 0 || i >= nvars) throw std::out_of_range("Poly::variable: index out of range");
        if (power < 0) throw std::invalid_argument("Poly::variable: negative exponent");
        Poly p(nvars);
        Expo e(nvars, 0);
        e[i] = power;
        p.terms_[e] = Rat(1);
        return p;
    }
    static Poly monomial(int nvars, const Expo& e, const Rat& c) {
        Poly p(nvars);
        if ((int)e.size() != nvars) throw std::invalid_argument("Poly::monomial: bad exponent length");
        for (int x : e)
            if (x < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::domain_error("Poly: not a constant");
        return terms_.begin()->second;
    }

    int degree() const {  // total degree, -1 for zero
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    // Common total degree of all terms, or nullopt if mixed. Zero counts as
    // homogeneous of every degree; we report 0.
    std::optional<int> is_homogeneous() const {
        if (terms_.empty()) return 0;
        int d = total_degree(terms_.begin()->first);
        for (auto& [e, c] : terms_)
            if (total_degree(e) != d) return std::nullopt;
        return d;
    }

    bool depends_on(int i) const {
        for (auto& [e, c] : terms_)
            if (e[i] > 0) return true;
        return false;
    }
    int degree_in(int i) const {
        int d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }

    // Leading data in graded lex order.
    const Expo& leading_exponent() const {
        if (terms_.empty()) throw std::domain_error("Poly: leading term of zero");
        const Expo* best = &terms_.begin()->first;
        for (auto& [e, c] : terms_)
            if (grlex_less(*best, e)) best = &e;
        return *best;
    }
    Rat leading_coefficient() const { return terms_.at(leading_exponent()); }

    Poly& add_term(const Expo& e, const Rat& c) {
        if ((int)e.size() != nvars_) throw std::invalid_argument("Poly::add_term: bad exponent length");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r(a.nvars_);
        for (auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r(a.nvars_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Expo e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const Rat& c, const Poly& a) {
        Poly r(a.nvars_);
        if (c == 0) return r;
        for (auto& [e, k] : a.terms_) r.terms_[e] = c * k;
        return r;
    }
    friend Poly operator*(const Poly& a, const Rat& c) { return c * a; }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int k) const {
        if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly r = constant(nvars_, Rat(1));
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // Formal partial derivative.
    Poly partial(int i) const {
        if (i < 0 || i >= nvars_) throw std::out_of_range("Poly::partial: index out of range");
        Poly r(nvars_);
        for (auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Expo f = e;
            f[i] -= 1;
            r.add_term(f, c * Rat(e[i]));
        }
        return r;
    }

    Rat eval(const std::vector<Rat>& pt) const {
        if ((int)pt.size() != nvars_) throw std::invalid_argument("Poly::eval: point length mismatch");
        Rat acc(0);
        for (auto& [e, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= pt[i];
            acc += t;
        }
        return acc;
    }

    // Substitute variable i by a rational value; the variable stays in the ring.
    Poly substitute(int i, const Rat& v) const {
        if (i < 0 || i >= nvars_) throw std::out_of_range("Poly::substitute: index out of range");
        Poly r(nvars_);
        for (auto& [e, c] : terms_) {
            Rat t = c;
            for (int k = 0; k < e[i]; ++k) t *= v;
            Expo f = e;
            f[i] = 0;
            r.add_term(f, t);
        }
        return r;
    }

    // Substitute variable i by another polynomial (same ring).
    Poly substitute(int i, const Poly& v) const {
        check_same(v);
        Poly r(nvars_);
        for (auto& [e, c] : terms_) {
            Expo f = e;
            f[i] = 0;
            Poly t = monomial(nvars_, f, c);
            t *= v.pow(e[i]);
            r += t;
        }
        return r;
    }

    // Multiply each term by var^(target - total degree). Requires target >= degree of every term.
    Poly homogenize(int var, int target) const {
        Poly r(nvars_);
        for (auto& [e, c] : terms_) {
            int d = total_degree(e);
            if (d > target) throw std::invalid_argument("Poly::homogenize: target below term degree");
            Expo f = e;
            f[var] += target - d;
            r.add_term(f, c);
        }
        return r;
    }

private:
    void check_same(const Poly& b) const {
        if (nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable-count mismatch");
    }

    int nvars_;
    std::map<Expo, Rat> terms_;
};

inline Poly scale(const Rat& c, const Poly& p) { return c * p; }

// Exact division: returns q with p == d*q, or nullopt when d does not divide p.
inline std::optional<Poly> exact_div(const Poly& p, const Poly& d) {
    if (p.nvars() != d.nvars()) throw std::invalid_argument("exact_div: variable-count mismatch");
    if (d.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    Poly q(p.nvars());
    Poly r = p;
    const Expo& de = d.leading_exponent();
    const Rat dc = d.leading_coefficient();
    while (!r.is_zero()) {
        const Expo& re = r.leading_exponent();
        Expo qe(p.nvars());
        for (int i = 0; i < p.nvars(); ++i) {
            qe[i] = re[i] - de[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Rat qc = r.terms().at(re) / dc;
        Poly t = Poly::monomial(p.nvars(), qe, qc);
        q += t;
        r -= t * d;
    }
    return q;
}

inline bool divides(const Poly& d, const Poly& p) { return exact_div(p, d).has_value(); }

// Euler field applied to p: sum_i z_i dp/dz_i. Equals deg(p)*p for homogeneous p.
inline Poly euler_apply(const Poly& p) {
    Poly r(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) r += Poly::variable(p.nvars(), i) * p.partial(i);
    return r;
}

// --- canonical text rendering (graded lex, descending) ---

// Variable names default to z0..; callers may pass custom names.
inline std::string default_var_name(int i) {
    return i < 10 ? "z" + std::to_string(i) : "z{" + std::to_string(i) + "}";
}

inline std::string render(const Poly& p, const std::vector<std::string>* names = nullptr) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Expo, Rat>*> ts;
    for (auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        Rat c = t->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rat a = neg ? Rat(-c) : c;
        std::string mono;
        for (int i = 0; i < p.nvars(); ++i) {
            int e = t->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names ? (*names)[i] : default_var_name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << mono;
        }
    }
    return os.str();
}

}  // namespace lfoliate
