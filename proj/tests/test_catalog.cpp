#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>

#include "lfoliate/catalog.hpp"

using namespace lfoliate;

namespace {
std::string data_dir() { return LFOLIATE_BUNDLED_CATALOG_DIR; }

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string(std::tmpnam(nullptr)) + ".cat";
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("bundled catalogs load with the expected entry counts") {
    std::map<std::string, int> expected{
        {"cp3_degree2.cat", 13}, {"cp4_sl2.cat", 2},      {"cp4_abelian.cat", 8},
        {"cp4_lalpha.cat", 17},  {"cp4_affsplit.cat", 9}, {"cp4_cubics.cat", 6}};
    for (auto& [file, count] : expected) {
        Catalog c = load_catalog(data_dir() + "/" + file);
        CHECK((int)c.entries.size() == count);
    }
}

TEST_CASE("every parameterized entry carries at least two instantiations") {
    for (auto& file : {"cp3_degree2.cat", "cp4_sl2.cat", "cp4_abelian.cat", "cp4_lalpha.cat",
                       "cp4_affsplit.cat", "cp4_cubics.cat"}) {
        Catalog c = load_catalog(data_dir() + "/" + std::string(file));
        for (auto& e : c.entries) {
            bool parameterized = !e.instantiations.front().empty();
            if (parameterized) CHECK(e.instantiations.size() >= 2);
        }
    }
}

TEST_CASE("empty catalog verifies trivially") {
    TempFile f(R"({"name": "empty", "entries": []})");
    Catalog c = load_catalog(f.path);
    CHECK(c.entries.empty());
    VerificationReport rep = run_all({c});
    CHECK(rep.failures() == 0);
    CHECK(rep.total_entries() == 0);
}

TEST_CASE("parse errors carry position data") {
    TempFile f("{ not json ]");
    CHECK_THROWS_AS(load_catalog(f.path), CatalogError);
    CHECK_THROWS_AS(load_catalog("/nonexistent/nothing.cat"), CatalogError);
    TempFile dup(R"({"name": "d", "entries": [
        {"id": "a", "n": 1, "degree": 0},
        {"id": "a", "n": 1, "degree": 0}]})");
    CHECK_THROWS_AS(load_catalog(dup.path), CatalogError);
}

TEST_CASE("fault injection: a corrupted integral fails with a printed residual") {
    // Af(vii) with the exponential numerator perturbed
    TempFile f(R"({"name": "faulty", "entries": [{
        "id": "Af(vii)-corrupted",
        "n": 3, "degree": 2,
        "generators": [
            "(z0 + z1) d/dz0 + z1 d/dz1 + z3 d/dz2",
            "z2 d/dz0 + z3 d/dz1"
        ],
        "integral": {"log": [["z0*z3 - z1*z2","1"],["z3","-2"]],
                     "exp_num": "-z2 + z1", "exp_den": "z3"},
        "presentation": {"name": "affine2"},
        "anchor": "fault injection"
    }]})");
    Catalog c = load_catalog(f.path);
    VerificationReport rep = run_all({c});
    CHECK(rep.failures() == 1);
    bool saw_residual = false;
    for (auto& ch : rep.catalogs[0].entries[0].checks)
        if (ch.name == "first_integral" && !ch.pass && ch.detail.find("residual") == 0 &&
            ch.detail.size() > std::string("residual ").size())
            saw_residual = true;
    CHECK(saw_residual);
}

TEST_CASE("constraint violations are rejected") {
    TempFile f(R"({"name": "c", "entries": [{
        "id": "bad-inst",
        "n": 3, "degree": 2,
        "generators": ["z1 d/dz0 + (z2 + z3) d/dz2 + z3 d/dz3",
                        "(z2 + k*z3) d/dz2 + z3 d/dz3"],
        "integral": {"log": [["z1","k"],["z3","-k"]],
                     "exp_num": "(k-1)*z0*z3 + z1*z2", "exp_den": "z1*z3"},
        "constraints": ["k != 1"],
        "instantiations": [{"k": "1"}]
    }]})");
    CHECK_THROWS_AS(load_catalog(f.path), CatalogError);
}

TEST_CASE("reports are deterministic") {
    Catalog c = load_catalog(data_dir() + "/cp3_degree2.cat");
    VerificationReport r1 = run_all({c});
    VerificationReport r2 = run_all({c});
    CHECK(render_text(r1) == render_text(r2));
    CHECK(render_json(r1).dump() == render_json(r2).dump());
    // timings stay out of the canonical forms
    CHECK(render_json(r1).dump().find("timing") == std::string::npos);
}

TEST_CASE("full bundled suite passes") {
    std::vector<Catalog> cats;
    for (auto& file : {"cp3_degree2.cat", "cp4_sl2.cat", "cp4_abelian.cat", "cp4_lalpha.cat",
                       "cp4_affsplit.cat", "cp4_cubics.cat", "cp_low_degree.cat", "cp4_q1q2.cat",
                       "codim_p.cat", "negatives.cat"})
        cats.push_back(load_catalog(data_dir() + "/" + std::string(file)));
    VerificationReport rep = run_all(cats);
    CHECK(rep.failures(false) == 0);  // zero failures among confidence: theorem
    CHECK(rep.failures(true) == 0);   // and currently none among paper-maple either
    CHECK(rep.total_entries() == 66);
}

TEST_CASE("paper-maple failures are flagged distinctly with residuals") {
    TempFile f(R"({"name": "maple", "entries": [{
        "id": "maple-corrupt",
        "n": 3, "degree": 2,
        "integral": {"log": [["z0*z3 - z1*z2 + z2^2","1"],["z3","-2"]]},
        "confidence": "paper-maple",
        "anchor": "fault"
    }]})");
    Catalog c = load_catalog(f.path);
    VerificationReport rep = run_all({c});
    CHECK(rep.failures(true) == 1);
    CHECK(rep.failures(false) == 0);  // not counted against theorem confidence
    std::string text = render_text(rep);
    CHECK(text.find("FAIL*") != std::string::npos);
    CHECK(text.find("paper-maple") != std::string::npos);
}
