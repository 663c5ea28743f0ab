#pragma once

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfoliate/foliation.hpp"
#include "lfoliate/invariants.hpp"
#include "lfoliate/parse.hpp"

namespace lfoliate {

// One classification item as stored in the catalog files. Strings stay in
// the surface grammar; parameters are instantiated per assignment when the
// entry is verified.
struct CatalogEntry {
    std::string id;
    std::string type = "integral";  // integral | cubic | negative | codim_p | q1q2 | pullback
    int n = 0;                      // ambient projective dimension
    int degree = 0;
    std::vector<std::string> vars;  // variable names, position = index
    // integral template
    std::vector<std::pair<std::string, std::string>> log_parts;  // (poly, exponent expr)
    std::string exp_num, exp_den;
    std::vector<std::string> generators;
    std::string presentation_name;
    std::map<std::string, std::string> presentation_params;
    std::vector<std::string> constraints;  // "name != value"
    std::vector<std::map<std::string, std::string>> instantiations;
    std::string anchor;
    std::string confidence = "theorem";
    nlohmann::json extra;  // entry-specific checks and data

    bool parameter_free() const {
        return instantiations.size() == 1 && instantiations.front().empty();
    }
};

struct Catalog {
    std::string name;
    std::vector<CatalogEntry> entries;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // residual / counterexample data on failure
};

struct EntryResult {
    std::string id;
    std::string confidence;
    std::vector<CheckResult> checks;
    long long elapsed_ms = 0;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

struct VerificationReport {
    struct CatalogBlock {
        std::string name;
        std::vector<EntryResult> entries;
    };
    std::vector<CatalogBlock> catalogs;

    int failures(bool include_maple = true) const {
        int f = 0;
        for (auto& c : catalogs)
            for (auto& e : c.entries)
                if (!e.all_pass() && (include_maple || e.confidence != "paper-maple")) ++f;
        return f;
    }
    int total_entries() const {
        int t = 0;
        for (auto& c : catalogs) t += (int)c.entries.size();
        return t;
    }
};

// ---- loading ----

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Catalog;
inline void validate_catalog(const Catalog& cat);

inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw CatalogError("parse error in " + path + ": " + e.what());
    }
    Catalog cat;
    cat.name = doc.value("name", path);
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw CatalogError(path + ": missing entries array");
    for (auto& j : doc["entries"]) {
        CatalogEntry e;
        e.id = j.at("id").get<std::string>();
        e.type = j.value("type", std::string("integral"));
        e.n = j.value("n", 0);
        e.degree = j.value("degree", 0);
        if (j.contains("vars"))
            for (auto& v : j["vars"]) e.vars.push_back(v.get<std::string>());
        else
            for (int i = 0; i <= e.n; ++i) e.vars.push_back(default_var_name(i));
        if (j.contains("integral")) {
            auto& ij = j["integral"];
            if (ij.contains("log"))
                for (auto& lp : ij["log"])
                    e.log_parts.push_back({lp.at(0).get<std::string>(), lp.at(1).get<std::string>()});
            e.exp_num = ij.value("exp_num", std::string());
            e.exp_den = ij.value("exp_den", std::string());
        }
        if (j.contains("generators"))
            for (auto& g : j["generators"]) e.generators.push_back(g.get<std::string>());
        if (j.contains("presentation")) {
            e.presentation_name = j["presentation"].value("name", std::string());
            if (j["presentation"].contains("params"))
                for (auto& [k, v] : j["presentation"]["params"].items())
                    e.presentation_params[k] = v.get<std::string>();
        }
        if (j.contains("constraints"))
            for (auto& c : j["constraints"]) e.constraints.push_back(c.get<std::string>());
        if (j.contains("instantiations"))
            for (auto& inst : j["instantiations"]) {
                std::map<std::string, std::string> m;
                for (auto& [k, v] : inst.items()) m[k] = v.get<std::string>();
                e.instantiations.push_back(m);
            }
        if (e.instantiations.empty()) e.instantiations.push_back({});
        e.anchor = j.value("anchor", std::string());
        e.confidence = j.value("confidence", std::string("theorem"));
        if (j.contains("extra")) e.extra = j["extra"];
        cat.entries.push_back(std::move(e));
    }
    // catalog-level invariant: ids unique
    for (size_t i = 0; i < cat.entries.size(); ++i)
        for (size_t k = i + 1; k < cat.entries.size(); ++k)
            if (cat.entries[i].id == cat.entries[k].id)
                throw CatalogError(path + ": duplicate entry id " + cat.entries[i].id);
    validate_catalog(cat);
    return cat;
}

// ---- verification ----

namespace catdetail {

inline ParseContext make_context(const CatalogEntry& e,
                                 const std::map<std::string, std::string>& inst) {
    ParseContext ctx;
    ctx.var_names = e.vars;
    for (auto& [k, v] : inst) ctx.params[k] = parse_rat_expr(v, ctx);
    return ctx;
}

inline void validate_constraints(const CatalogEntry& e, const ParseContext& ctx) {
    for (auto& c : e.constraints) {
        auto pos = c.find("!=");
        if (pos == std::string::npos) throw CatalogError(e.id + ": bad constraint '" + c + "'");
        Rat lhs = parse_rat_expr(c.substr(0, pos), ctx);
        Rat rhs = parse_rat_expr(c.substr(pos + 2), ctx);
        if (lhs == rhs)
            throw CatalogError(e.id + ": instantiation violates constraint '" + c + "'");
    }
}

inline LogExpIntegral build_integral(const CatalogEntry& e, const ParseContext& ctx) {
    std::vector<std::pair<Poly, Rat>> parts;
    int n = ctx.nvars();
    for (auto& [ps, ls] : e.log_parts) {
        Poly p = parse_poly(ps, ctx);
        Rat l = parse_rat_expr(ls, ctx);
        if (l == 0) continue;
        if (p.is_constant()) throw CatalogError(e.id + ": constant log factor " + ps);
        bool merged = false;
        for (auto& [q, mu] : parts)
            if (q == p) {
                mu += l;
                merged = true;
            }
        if (!merged) parts.push_back({p, l});
    }
    LogExpIntegral f;
    f.nvars = n;
    f.log_part = std::move(parts);
    if (!e.exp_num.empty()) {
        f.exp_num = parse_poly(e.exp_num, ctx);
        f.exp_den = e.exp_den.empty() ? Poly::constant(n, Rat(1)) : parse_poly(e.exp_den, ctx);
        f.has_exp = true;
    } else {
        f.exp_num = Poly(n);
        f.exp_den = Poly::constant(n, Rat(1));
    }
    return f;
}

inline std::vector<VField> build_generators(const CatalogEntry& e, const ParseContext& ctx) {
    std::vector<VField> gens;
    for (auto& g : e.generators) gens.push_back(parse_field(g, ctx));
    return gens;
}

inline void push(std::vector<CheckResult>& out, const std::string& name, bool pass,
                 const std::string& detail = "") {
    out.push_back({name, pass, pass ? "" : detail});
}

inline std::optional<PresentationName> claimed_presentation(const CatalogEntry& e) {
    if (e.presentation_name.empty()) return std::nullopt;
    auto p = presentation_from_string(e.presentation_name);
    if (!p) throw CatalogError(e.id + ": unknown presentation " + e.presentation_name);
    return p;
}

inline void check_presentation(const CatalogEntry& e, const ParseContext& ctx, const LieSpan& span,
                               std::vector<CheckResult>& out) {
    auto claimed = claimed_presentation(e);
    if (!claimed) return;
    std::optional<Rat> alpha;
    auto it = e.presentation_params.find("alpha");
    if (it != e.presentation_params.end()) alpha = parse_rat_expr(it->second, ctx);
    PresentationMatch m = matches_presentation(span, *claimed, alpha);
    std::string detail = m.detail;
    if (m.alpha_invariant)
        detail += (detail.empty() ? "" : "; ") + std::string("alpha invariant tr^2/det = ") +
                  to_string(*m.alpha_invariant);
    push(out, "presentation:" + e.presentation_name, m.matches, detail);
}

inline void run_extra_checks(const CatalogEntry& e, const ParseContext& ctx, const KForm* omega,
                             std::vector<CheckResult>& out) {
    if (!e.extra.is_array()) return;
    for (auto& x : e.extra) {
        std::string kind = x.value("type", std::string());
        if (kind == "sing_line") {
            // all coefficients vanish on the locus where the listed variables are 0
            if (!omega) {
                push(out, "sing_line", false, "no form available");
                continue;
            }
            bool ok = true;
            for (auto& [idx, c] : omega->components()) {
                Poly r = c;
                for (auto& vn : x["vars"]) {
                    auto vi = ctx.var_index(vn.get<std::string>());
                    if (!vi) throw CatalogError(e.id + ": bad sing_line variable");
                    r = r.substitute(*vi, Rat(0));
                }
                if (!r.is_zero()) ok = false;
            }
            push(out, "sing_line", ok, "coefficients do not all vanish on the locus");
        } else if (kind == "integrating_factor") {
            if (!omega) {
                push(out, "integrating_factor", false, "no form available");
                continue;
            }
            Poly p = parse_poly(x.at("poly").get<std::string>(), ctx);
            push(out, "integrating_factor", integrating_factor_check(*omega, p),
                 "P dw != dP ^ w for " + x.at("poly").get<std::string>());
        } else if (kind == "leaf_degree") {
            // homogeneity bookkeeping on the integral: lambda-weighted degrees
            LogExpIntegral f = build_integral(e, ctx);
            Rat pos(0), neg(0);
            for (auto& [p, l] : f.log_part) {
                auto d = p.is_homogeneous();
                if (!d) {
                    pos = Rat(-1);
                    break;
                }
                if (l > 0) pos += l * Rat(*d);
                else neg -= l * Rat(*d);
            }
            bool ok = pos == Rat(x.at("num").get<long>()) && neg == Rat(x.at("den").get<long>());
            push(out, "leaf_degree", ok,
                 "weighted degrees " + to_string(pos) + "/" + to_string(neg));
        } else if (kind == "symmetry") {
            if (!omega) {
                push(out, "symmetry", false, "no form available");
                continue;
            }
            VField s = parse_field(x.at("field").get<std::string>(), ctx);
            push(out, "symmetry", symmetry_check(*omega, s), "not a symmetry");
        } else if (kind == "tangent_omega_dim") {
            if (!omega) {
                push(out, "tangent_omega_dim", false, "no form available");
                continue;
            }
            LieSpan s = tangent_linear_algebra(*omega, TangentMode::annihilate_omega);
            int want = x.at("dim").get<int>();
            push(out, "tangent_omega_dim", s.dimension() == want,
                 "dimension " + std::to_string(s.dimension()) + " != " + std::to_string(want));
        } else {
            push(out, "extra:" + kind, false, "unknown extra check");
        }
    }
}

inline void verify_integral_entry(const CatalogEntry& e, const ParseContext& ctx,
                                  std::vector<CheckResult>& out) {
    LogExpIntegral f = build_integral(e, ctx);
    f.validate_coprime();
    push(out, "balance", f.is_projective(), "integral is not projectively balanced");

    KForm wi = integral_to_form(f);
    bool form_ok = !wi.is_zero() && check_descent(wi) && check_integrable(wi);
    auto hdeg = wi.homogeneous_coefficient_degree();
    push(out, "integral_form", form_ok && hdeg.has_value(),
         "cleared dlog F is zero, non-homogeneous, or not integrable");
    if (hdeg)
        push(out, "integral_degree", *hdeg - 1 == e.degree,
             "degree " + std::to_string(*hdeg - 1) + " != " + std::to_string(e.degree));

    int nvars = ctx.nvars();
    if (!e.generators.empty()) {
        std::vector<VField> gens = build_generators(e, ctx);
        std::vector<VField> with_r = gens;
        with_r.push_back(VField::radial(nvars));
        // (a) first-integral annihilation
        std::string residual;
        bool ann = true;
        for (auto& x : with_r) {
            Poly r = first_integral_residual(f, x);
            if (!r.is_zero()) {
                ann = false;
                residual = render(r, &ctx.var_names);
                break;
            }
        }
        push(out, "first_integral", ann, "residual " + residual);
        push(out, "pointwise", generic_dimension(with_r, nvars) == nvars - 1,
             "generators + R have generic pointwise dimension " +
                 std::to_string(generic_dimension(with_r, nvars)) + " != " +
                 std::to_string(nvars - 1));
        // every generator is tangent to the cleared dlog form
        bool tangent = true;
        for (auto& x : gens)
            if (!interior(x, wi).coefficient({}).is_zero()) tangent = false;
        push(out, "tangent_to_form", tangent, "a generator does not annihilate the form");
        // (b) defining form from the generators, when they number n-1
        if ((int)gens.size() == nvars - 2) {
            try {
                FoliationForm df = defining_form(gens);
                push(out, "defining_form", true);
                push(out, "defining_degree", df.nu == e.degree,
                     "degree " + std::to_string(df.nu) + " != " + std::to_string(e.degree));
                // (c) proportionality of the two routes
                push(out, "proportional", proportional(df.omega, wi),
                     "defining form is not proportional to the cleared dlog F");
                run_extra_checks(e, ctx, &df.omega, out);
            } catch (const std::exception& ex) {
                push(out, "defining_form", false, ex.what());
            }
        } else {
            run_extra_checks(e, ctx, &wi, out);
        }
        // (d) presentation of the generator span
        std::vector<LinField> lins;
        bool linear = true;
        for (auto& g : gens) {
            auto lf = LinField::from_field(g);
            if (!lf) linear = false;
            else lins.push_back(*lf);
        }
        if (linear) check_presentation(e, ctx, reduce_span(lins), out);
    } else {
        // normal-form route: recover the tangent algebra from the form itself
        LieSpan lp = tangent_linear_algebra(wi, TangentMode::annihilate_domega);
        std::vector<VField> with_r;
        for (auto& b : lp.basis()) with_r.push_back(b.field());
        with_r.push_back(VField::radial(nvars));
        push(out, "tangent_pointwise", generic_dimension(with_r, nvars) == nvars - 1,
             "tangent algebra + R has generic pointwise dimension " +
                 std::to_string(generic_dimension(with_r, nvars)) + " != " +
                 std::to_string(nvars - 1));
        check_presentation(e, ctx, lp, out);
        run_extra_checks(e, ctx, &wi, out);
    }
}

inline void verify_cubic_entry(const CatalogEntry& e, const ParseContext& ctx,
                               std::vector<CheckResult>& out) {
    Poly p = parse_poly(e.extra.at("poly").get<std::string>(), ctx);
    LieSpan ann = annihilator_of_polynomial(p);
    int want_generic = e.extra.value("annihilator_generic_dim", ctx.nvars() - 1);
    push(out, "annihilator_generic_dim", generic_dimension(ann, ctx.nvars()) == want_generic,
         "generic pointwise dimension " + std::to_string(generic_dimension(ann, ctx.nvars())));
    if (e.extra.contains("annihilator_dim")) {
        int want = e.extra["annihilator_dim"].get<int>();
        push(out, "annihilator_dim", ann.dimension() == want,
             "dimension " + std::to_string(ann.dimension()) + " != " + std::to_string(want));
    }
    if (e.extra.contains("fields")) {
        bool ok = true;
        std::string bad;
        for (auto& fs : e.extra["fields"]) {
            VField x = parse_field(fs.get<std::string>(), ctx);
            auto lf = LinField::from_field(x);
            if (!lf || !ann.contains(*lf) || !apply(x, p).is_zero()) {
                ok = false;
                bad = fs.get<std::string>();
                break;
            }
        }
        push(out, "listed_fields", ok, "field not in the annihilator: " + bad);
    }
    bool expect_l = e.extra.value("is_l_foliation", true);
    push(out, "l_foliation", (generic_dimension(ann, ctx.nvars()) == ctx.nvars() - 1) == expect_l,
         "pointwise dimension does not match the claim");
}

inline void verify_negative_entry(const CatalogEntry& e, const ParseContext& ctx,
                                  std::vector<CheckResult>& out) {
    std::vector<std::pair<LinField, LinField>> constraints;
    for (auto& c : e.extra.at("bracket_constraints")) {
        VField b = parse_field(c.at(0).get<std::string>(), ctx);
        VField cc = parse_field(c.at(1).get<std::string>(), ctx);
        auto lb = LinField::from_field(b);
        auto lc = LinField::from_field(cc);
        if (!lb || !lc) throw CatalogError(e.id + ": non-linear constraint field");
        constraints.push_back({*lb, *lc});
    }
    auto sol = solve_bracket_system(constraints);
    std::string expect = e.extra.value("expect", std::string("infeasible"));
    if (expect == "infeasible") {
        push(out, "infeasible", !sol.feasible, "system unexpectedly has a solution");
    } else {
        bool ok = sol.feasible;
        if (ok && e.extra.contains("kernel_dim"))
            ok = (int)sol.kernel.size() == e.extra["kernel_dim"].get<int>();
        push(out, "feasible", ok,
             sol.feasible ? "kernel dimension " + std::to_string(sol.kernel.size())
                          : "system unexpectedly infeasible");
        if (sol.feasible) {
            // substitute back
            bool verified = true;
            for (auto& [b, c] : constraints)
                if (!(lin_bracket(sol.particular, b) == c)) verified = false;
            for (auto& k : sol.kernel)
                for (auto& [b, c] : constraints)
                    if (!lin_bracket(k, b).field().is_zero()) verified = false;
            push(out, "substitution", verified, "solution does not satisfy the constraints");
        }
    }
}

inline void verify_codim_p_entry(const CatalogEntry& e, const ParseContext&,
                                 std::vector<CheckResult>& out) {
    int p = e.extra.at("p").get<int>();
    auto rep = radial_codim_p_check(p, e.n);
    push(out, "shift_fields", rep.shifts_ok, "a shift field fails to annihilate");
    push(out, "block_radial", rep.block_radial_ok, "block radial fails to annihilate");
    push(out, "tangent_dim", rep.generic_tangent_dim == e.n + 1 - p,
         "generic tangent dimension " + std::to_string(rep.generic_tangent_dim));
    if (p == 1)
        push(out, "rij", rep.rij_all_ok, "R_01 should annihilate for p = 1");
}

inline void verify_q1q2_entry(const CatalogEntry& e, const ParseContext& ctx,
                              std::vector<CheckResult>& out) {
    Poly q1 = parse_poly(e.extra.at("q1").get<std::string>(), ctx);
    Poly q2 = parse_poly(e.extra.at("q2").get<std::string>(), ctx);
    std::vector<VField> fields;
    std::vector<LinField> lins;
    for (auto& fs : e.extra.at("fields")) {
        VField x = parse_field(fs.get<std::string>(), ctx);
        fields.push_back(x);
        auto lf = LinField::from_field(x);
        if (!lf) throw CatalogError(e.id + ": q1q2 field not linear");
        lins.push_back(*lf);
    }
    bool cross = true;
    std::string residual;
    for (auto& x : fields) {
        Poly r = apply(x, q1) * q2 - q1 * apply(x, q2);
        if (!r.is_zero()) {
            cross = false;
            residual = render(r, &ctx.var_names);
            break;
        }
    }
    push(out, "cross_annihilation", cross, "X(Q1)Q2 - Q1 X(Q2) = " + residual);
    LieSpan span = reduce_span(lins);
    push(out, "span_dim", span.dimension() == 4,
         "span dimension " + std::to_string(span.dimension()));
    push(out, "closed", is_bracket_closed(span), "span is not a Lie algebra");
    if (is_bracket_closed(span)) push(out, "solvable", is_solvable(span), "span is not solvable");
    push(out, "generic_dim", generic_dimension(span, ctx.nvars()) == 4,
         "generic pointwise dimension " + std::to_string(generic_dimension(span, ctx.nvars())));
    // non-regularity: rank drops at sampled points on z4 = 0 (last variable)
    int z4 = ctx.nvars() - 1;
    bool drops = true;
    std::vector<std::vector<Rat>> pts = generic_point_schedule(ctx.nvars());
    for (auto& pt : pts) {
        auto q = pt;
        q[z4] = Rat(0);
        if (pointwise_dimension(span, q) >= 4) drops = false;
    }
    push(out, "rank_drop_on_z4", drops, "no rank drop along z4 = 0");
}

inline void verify_pullback_entry(const CatalogEntry& e, const ParseContext& ctx,
                                  std::vector<CheckResult>& out) {
    // a linear pull-back of a degree >= 2 plane foliation is not an L-foliation
    VField x = parse_field(e.extra.at("plane_field").get<std::string>(), ctx);
    int nvars = ctx.nvars();
    KForm vol3 = KForm::basis(nvars, {0, 1, 2});
    KForm w = interior(VField::radial(nvars), interior(x, vol3));
    Poly g = w.coefficient_gcd();
    KForm red(1, nvars);
    for (auto& [idx, c] : w.components()) red.add_term(idx, *exact_div(c, g));
    bool base_ok = check_descent(red) && check_integrable(red);
    auto hdeg = red.homogeneous_coefficient_degree();
    push(out, "pullback_form", base_ok && hdeg && *hdeg - 1 == e.degree,
         "pull-back form malformed");
    LieSpan tl = tangent_linear_algebra(red);
    int gd = generic_dimension(tl, nvars);
    push(out, "obstruction", gd < nvars, "tangent algebra is pointwise full: dim " +
                                             std::to_string(gd));
    if (e.extra.contains("tangent_generic_dim"))
        push(out, "tangent_generic_dim", gd == e.extra["tangent_generic_dim"].get<int>(),
             "generic dimension " + std::to_string(gd));
}

}  // namespace catdetail

// Load-time validation: every instantiation respects the constraints and all
// stored strings parse in the entry's variable context.
inline void validate_catalog(const Catalog& cat) {
    for (auto& e : cat.entries) {
        if ((int)e.vars.size() != e.n + 1)
            throw CatalogError(e.id + ": variable list does not match n+1");
        for (auto& inst : e.instantiations) {
            ParseContext ctx = catdetail::make_context(e, inst);
            catdetail::validate_constraints(e, ctx);
            if (!e.log_parts.empty() || !e.exp_num.empty())
                catdetail::build_integral(e, ctx);
            catdetail::build_generators(e, ctx);
        }
    }
}

inline EntryResult verify_entry(const CatalogEntry& e) {
    EntryResult res;
    res.id = e.id;
    res.confidence = e.confidence;
    auto t0 = std::chrono::steady_clock::now();
    int inst_no = 0;
    for (auto& inst : e.instantiations) {
        ++inst_no;
        std::string tag = e.instantiations.size() > 1 ? "#" + std::to_string(inst_no) + ":" : "";
        std::vector<CheckResult> checks;
        try {
            ParseContext ctx = catdetail::make_context(e, inst);
            catdetail::validate_constraints(e, ctx);
            if (e.type == "integral")
                catdetail::verify_integral_entry(e, ctx, checks);
            else if (e.type == "cubic")
                catdetail::verify_cubic_entry(e, ctx, checks);
            else if (e.type == "negative")
                catdetail::verify_negative_entry(e, ctx, checks);
            else if (e.type == "codim_p")
                catdetail::verify_codim_p_entry(e, ctx, checks);
            else if (e.type == "q1q2")
                catdetail::verify_q1q2_entry(e, ctx, checks);
            else if (e.type == "pullback")
                catdetail::verify_pullback_entry(e, ctx, checks);
            else
                checks.push_back({"type", false, "unknown entry type " + e.type});
        } catch (const std::exception& ex) {
            checks.push_back({"exception", false, ex.what()});
        }
        for (auto& c : checks) res.checks.push_back({tag + c.name, c.pass, c.detail});
    }
    auto t1 = std::chrono::steady_clock::now();
    res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return res;
}

inline VerificationReport run_all(const std::vector<Catalog>& catalogs) {
    VerificationReport rep;
    for (auto& cat : catalogs) {
        VerificationReport::CatalogBlock block;
        block.name = cat.name;
        for (auto& e : cat.entries) block.entries.push_back(verify_entry(e));
        rep.catalogs.push_back(std::move(block));
    }
    return rep;
}

inline std::string render_text(const VerificationReport& rep, bool with_timings = false) {
    std::ostringstream os;
    int pass = 0, fail = 0, maple_fail = 0;
    for (auto& c : rep.catalogs) {
        os << "== " << c.name << "\n";
        for (auto& e : c.entries) {
            bool ok = e.all_pass();
            os << (ok ? "PASS" : (e.confidence == "paper-maple" ? "FAIL*" : "FAIL")) << "  " << e.id;
            if (!ok && e.confidence == "paper-maple") os << "  [paper-maple: needs adjudication]";
            if (with_timings) os << "  (" << e.elapsed_ms << " ms)";
            os << "\n";
            if (ok)
                ++pass;
            else {
                ++(e.confidence == "paper-maple" ? maple_fail : fail);
                for (auto& ch : e.checks)
                    if (!ch.pass) os << "      " << ch.name << ": " << ch.detail << "\n";
            }
        }
    }
    os << "-- " << pass << " passed, " << fail << " failed";
    if (maple_fail) os << ", " << maple_fail << " paper-maple failures flagged";
    os << "\n";
    return os.str();
}

inline nlohmann::json render_json(const VerificationReport& rep, bool with_timings = false) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& c : rep.catalogs) {
        nlohmann::json jc;
        jc["catalog"] = c.name;
        jc["entries"] = nlohmann::json::array();
        for (auto& e : c.entries) {
            nlohmann::json je;
            je["id"] = e.id;
            je["confidence"] = e.confidence;
            je["pass"] = e.all_pass();
            if (with_timings) je["timing_ms"] = e.elapsed_ms;
            je["checks"] = nlohmann::json::array();
            for (auto& ch : e.checks) {
                nlohmann::json jch;
                jch["name"] = ch.name;
                jch["pass"] = ch.pass;
                if (!ch.pass) jch["detail"] = ch.detail;
                je["checks"].push_back(jch);
            }
            jc["entries"].push_back(je);
        }
        out.push_back(jc);
    }
    return out;
}

}  // namespace lfoliate
