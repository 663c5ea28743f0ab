// Command-line front end: parse expressions, build defining forms, analyze
// algebras, and re-run the bundled verification catalogs.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "lfoliate/catalog.hpp"
#include "lfoliate/invariants.hpp"
#include "lfoliate/parse.hpp"

using namespace lfoliate;

namespace {

ParseContext context_for(int nvars) { return ParseContext::standard(nvars); }

int guess_nvars(const std::vector<std::string>& exprs, int explicit_n) {
    if (explicit_n >= 0) return explicit_n + 1;
    // scan for the highest variable index mentioned
    int best = -1;
    for (auto& s : exprs)
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] == 'z' && std::isdigit((unsigned char)s[i + 1])) {
                int v = 0;
                size_t j = i + 1;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) v = v * 10 + (s[j++] - '0');
                best = std::max(best, v);
            }
    if (best < 0) throw std::runtime_error("cannot infer the variable count; pass --n");
    return best + 1;
}

std::string catalog_dir() {
    if (const char* env = std::getenv("LFOLIATE_CATALOG_DIR")) return env;
#ifdef LFOLIATE_BUNDLED_CATALOG_DIR
    return LFOLIATE_BUNDLED_CATALOG_DIR;
#else
    return "data";
#endif
}

const std::vector<std::string> kBundledCatalogs = {
    "cp3_degree2.cat", "cp4_sl2.cat",      "cp4_abelian.cat", "cp4_lalpha.cat",
    "cp4_affsplit.cat", "cp4_cubics.cat",  "cp_low_degree.cat", "cp4_q1q2.cat",
    "codim_p.cat",     "negatives.cat"};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for foliations spanned by linear vector fields"};
    app.require_subcommand(1);

    // check-integral
    auto* ci = app.add_subcommand("check-integral", "verify a first integral against fields");
    std::string ci_integral;
    std::vector<std::string> ci_fields;
    int ci_n = -1;
    bool ci_no_radial = false;
    ci->add_option("--integral", ci_integral, "first integral expression")->required();
    ci->add_option("--fields", ci_fields, "vector field expressions")->required();
    ci->add_option("--n", ci_n, "projective dimension (variables z0..zn)");
    ci->add_flag("--no-radial", ci_no_radial, "do not add the radial field");

    // defining-form
    auto* df = app.add_subcommand("defining-form", "contract the volume form by R and the fields");
    std::vector<std::string> df_fields;
    int df_n = -1;
    df->add_option("--fields", df_fields, "vector field expressions")->required();
    df->add_option("--n", df_n, "projective dimension");

    // tangent-algebra
    auto* ta = app.add_subcommand("tangent-algebra", "linear fields annihilating a 1-form");
    std::string ta_form;
    std::string ta_mode = "omega";
    int ta_n = -1;
    ta->add_option("--form", ta_form, "1-form expression")->required();
    ta->add_option("--mode", ta_mode, "omega (i_X w = 0) or domega (i_X dw = 0)");
    ta->add_option("--n", ta_n, "projective dimension");

    // lie-analyze
    auto* la = app.add_subcommand("lie-analyze", "structure constants and presentation of a span");
    std::vector<std::string> la_fields;
    int la_n = -1;
    la->add_option("--fields", la_fields, "linear field expressions")->required();
    la->add_option("--n", la_n, "projective dimension");

    // invariants
    auto* iv = app.add_subcommand("invariants", "annihilation checks for classical actions");
    std::string iv_action, iv_check;
    iv->add_option("--action", iv_action, "sl2-binary:<d> | sl:<k>:sym | sl:<k>:asym")->required();
    iv->add_option("--check", iv_check, "restrict to one named invariant");

    // reproduce
    auto* rp = app.add_subcommand("reproduce", "re-verify the bundled classification catalogs");
    std::string rp_catalog;
    std::string rp_only;
    bool rp_json = false, rp_timings = false;
    rp->add_option("--catalog", rp_catalog, "catalog file or directory (default: bundled)");
    rp->add_option("--only", rp_only, "verify a single entry id");
    rp->add_flag("--json", rp_json, "machine-readable report");
    rp->add_flag("--timings", rp_timings, "include timings (breaks byte-stability)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ci) {
            std::vector<std::string> all = ci_fields;
            all.push_back(ci_integral);
            ParseContext ctx = context_for(guess_nvars(all, ci_n));
            LogExpIntegral f = parse_integral(ci_integral, ctx);
            std::vector<VField> fields;
            for (auto& s : ci_fields) fields.push_back(parse_field(s, ctx));
            if (!ci_no_radial) fields.push_back(VField::radial(ctx.nvars()));
            bool ok = true;
            for (size_t i = 0; i < fields.size(); ++i) {
                Poly r = first_integral_residual(f, fields[i]);
                if (!r.is_zero()) {
                    ok = false;
                    std::cout << "FAIL field " << i << ": residual " << render(r) << "\n";
                }
            }
            if (ok) std::cout << "PASS: all fields annihilate the integral\n";
            return ok ? 0 : 1;
        }
        if (*df) {
            ParseContext ctx = context_for(guess_nvars(df_fields, df_n));
            std::vector<VField> fields;
            for (auto& s : df_fields) fields.push_back(parse_field(s, ctx));
            FoliationForm f = defining_form(fields);
            std::cout << "omega = " << render(f.omega) << "\n";
            std::cout << "degree = " << f.nu << "\n";
            std::cout << "extracted gcd = " << render(f.extracted_factor) << "\n";
            std::cout << "coefficient gcd after reduction = "
                      << render(f.omega.coefficient_gcd()) << "\n";
            return 0;
        }
        if (*ta) {
            ParseContext ctx = context_for(guess_nvars({ta_form}, ta_n));
            KForm w = parse_form(ta_form, ctx);
            LieSpan s = tangent_linear_algebra(
                w, ta_mode == "domega" ? TangentMode::annihilate_domega
                                       : TangentMode::annihilate_omega);
            std::cout << "dimension = " << s.dimension() << "\n";
            for (auto& b : s.basis()) std::cout << "  " << render(b.field()) << "\n";
            return 0;
        }
        if (*la) {
            ParseContext ctx = context_for(guess_nvars(la_fields, la_n));
            std::vector<LinField> lins;
            for (auto& s : la_fields) {
                auto lf = LinField::from_field(parse_field(s, ctx));
                if (!lf) throw std::runtime_error("field is not linear: " + s);
                lins.push_back(*lf);
            }
            LieSpan span = reduce_span(lins);
            std::cout << "dimension = " << span.dimension() << "\n";
            std::cout << render_structure_constants(span);
            if (is_bracket_closed(span)) {
                auto ds = derived_series(span);
                std::cout << "derived series:";
                for (int d : ds) std::cout << " " << d;
                std::cout << (is_solvable(span) ? "  (solvable)" : "  (not solvable)") << "\n";
                auto m = classify_presentation(span);
                if (m.matches) {
                    std::cout << "presentation: " << to_string(m.detected);
                    if (m.alpha_invariant)
                        std::cout << "  (alpha invariant tr^2/det = " << to_string(*m.alpha_invariant)
                                  << ")";
                    std::cout << "\n";
                } else {
                    std::cout << "presentation: none (" << m.detail << ")\n";
                }
            }
            return 0;
        }
        if (*iv) {
            InducedAction act;
            std::vector<std::pair<std::string, Poly>> invs;
            if (iv_action.rfind("sl2-binary:", 0) == 0) {
                int d = std::stoi(iv_action.substr(11));
                act = sl2_on_binary_forms(d);
                if (d == 3) invs.push_back({"discriminant", discriminant_cubic()});
                if (d == 4) {
                    invs.push_back({"P", quartic_P()});
                    invs.push_back({"H", quartic_H()});
                    invs.push_back({"Delta", quartic_Delta()});
                }
            } else if (iv_action.rfind("sl:", 0) == 0) {
                auto rest = iv_action.substr(3);
                auto colon = rest.find(':');
                int k = std::stoi(rest.substr(0, colon));
                std::string kind = rest.substr(colon + 1);
                act = sl_on_matrix_space(k, kind == "sym" ? MatrixKind::symmetric
                                                          : MatrixKind::antisymmetric);
                auto m = symbolic_matrix(k, kind == "sym" ? MatrixKind::symmetric
                                                          : MatrixKind::antisymmetric);
                if (kind == "sym")
                    invs.push_back({"det", poly_det(m)});
                else
                    invs.push_back({"pfaffian", pfaffian(m)});
            } else {
                throw std::runtime_error("unknown action " + iv_action);
            }
            std::cout << "generators: " << act.rep.size()
                      << ", lie morphism: " << (is_lie_morphism(act) ? "yes" : "no") << "\n";
            bool all = true;
            if (!iv_check.empty()) {
                std::erase_if(invs, [&](auto& p) { return p.first != iv_check; });
                if (invs.empty()) throw std::runtime_error("no invariant named " + iv_check);
            }
            for (auto& [name, inv] : invs) {
                bool ok = annihilates_all(act, inv);
                all = all && ok;
                std::cout << (ok ? "PASS " : "FAIL ") << name << " annihilated by all generators\n";
            }
            return all ? 0 : 1;
        }
        if (*rp) {
            namespace fs = std::filesystem;
            std::vector<Catalog> cats;
            auto load_into = [&](const fs::path& p) { cats.push_back(load_catalog(p.string())); };
            if (!rp_catalog.empty()) {
                fs::path p(rp_catalog);
                if (fs::is_directory(p)) {
                    for (auto& name : kBundledCatalogs)
                        if (fs::exists(p / name)) load_into(p / name);
                } else {
                    load_into(p);
                }
            } else {
                fs::path dir(catalog_dir());
                for (auto& name : kBundledCatalogs)
                    if (fs::exists(dir / name)) load_into(dir / name);
            }
            if (!rp_only.empty()) {
                std::vector<Catalog> filtered;
                for (auto& c : cats) {
                    Catalog keep;
                    keep.name = c.name;
                    for (auto& e : c.entries)
                        if (e.id == rp_only) keep.entries.push_back(e);
                    if (!keep.entries.empty()) filtered.push_back(keep);
                }
                cats = std::move(filtered);
                if (cats.empty()) throw std::runtime_error("no entry with id " + rp_only);
            }
            VerificationReport rep = run_all(cats);
            if (rp_json)
                std::cout << render_json(rep, rp_timings).dump(2) << "\n";
            else
                std::cout << render_text(rep, rp_timings);
            long long total = 0;
            for (auto& c : rep.catalogs)
                for (auto& e : c.entries) total += e.elapsed_ms;
            std::cerr << "total verification time: " << total << " ms\n";
            return rep.failures() == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
