#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace lfoliate {

// Exact rational scalar. mpq_class keeps the canonical invariants we rely on
// everywhere: gcd(|num|,den)=1, den>0, zero is 0/1.
using Rat = mpq_class;

inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long n, long d) {
    if (d == 0) throw std::domain_error("rat: zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline std::optional<Rat> rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor of log-free integer check helpers used by parsers.
inline std::optional<long> as_long(const Rat& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p()) return std::nullopt;
    return r.get_num().get_si();
}

}  // namespace lfoliate
