#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lfoliate/gcd.hpp"
#include "lfoliate/poly.hpp"

using namespace lfoliate;

namespace {

Poly z(int nvars, int i) { return Poly::variable(nvars, i); }
Poly c(int nvars, long v) { return Poly::constant(nvars, Rat(v)); }

// Gordan-Noether cubic on C^5: z1^2 z3 + z1 z2 z4 + z2^2 z5, stored with
// variables z1..z5 mapped to indices 0..4.
Poly gordan_noether() {
    int n = 5;
    Poly z1 = z(n, 0), z2 = z(n, 1), z3 = z(n, 2), z4 = z(n, 3), z5 = z(n, 4);
    return z1 * z1 * z3 + z1 * z2 * z4 + z2 * z2 * z5;
}

std::mt19937 rng(20240811);

Poly random_poly(int nvars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> ex(0, max_deg);
    Poly p(nvars);
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        Expo e(nvars, 0);
        int budget = max_deg;
        for (int i = 0; i < nvars && budget > 0; ++i) {
            e[i] = ex(rng) % (budget + 1);
            budget -= e[i];
        }
        p.add_term(e, Rat(coef(rng)));
    }
    return p;
}

std::vector<Rat> random_point(int nvars) {
    std::uniform_int_distribution<int> v(-5, 5);
    std::vector<Rat> pt;
    for (int i = 0; i < nvars; ++i) pt.push_back(Rat(v(rng)));
    return pt;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    int n = 2;
    Poly z0 = z(n, 0), z1 = z(n, 1);
    CHECK((z0 + z1) * (z0 - z1) == z0 * z0 - z1 * z1);
    Poly p = z0 * z0 * z1 + c(n, 3) * z0 - c(n, 7);
    CHECK((p + (-p)).is_zero());
    CHECK(p - p == Poly(n));
}

TEST_CASE("gordan-noether assembles from products") {
    int n = 5;
    Poly sum = z(n, 0) * z(n, 0) * z(n, 2);
    sum += z(n, 0) * z(n, 1) * z(n, 3);
    sum += z(n, 1) * z(n, 1) * z(n, 4);
    CHECK(sum == gordan_noether());
    CHECK(render(sum) == "z0^2*z2 + z0*z1*z3 + z1^2*z4");
}

TEST_CASE("partial derivatives") {
    Poly p = gordan_noether();
    // d/dz1 -> 2 z1 z3 + z2 z4 (indices 0-based: d/d index0)
    Poly expect = Rat(2) * z(5, 0) * z(5, 2) + z(5, 1) * z(5, 3);
    CHECK(p.partial(0) == expect);
    CHECK((z(5, 0) * z(5, 0) * z(5, 2)).partial(4).is_zero());
    Poly cube = z(5, 0).pow(3);
    CHECK(cube.partial(0) == Rat(3) * z(5, 0).pow(2));
    CHECK_THROWS(p.partial(9));
}

TEST_CASE("exact division") {
    int n = 2;
    Poly z0 = z(n, 0), z1 = z(n, 1);
    auto q = exact_div(z0 * z0 - z1 * z1, z0 - z1);
    REQUIRE(q);
    CHECK(*q == z0 + z1);

    Poly num = z0 * z1 * (z0 - z1);
    Poly den = z0 * (z0 - z1);
    auto q2 = exact_div(num, den);
    REQUIRE(q2);
    CHECK(*q2 * den == num);  // verified by multiplying back
    CHECK(*q2 == z1);

    CHECK_FALSE(exact_div(z0 * z0, z1));
    CHECK_THROWS(exact_div(z0, Poly(n)));
}

TEST_CASE("gcd on hand-checked instances") {
    int n = 2;
    Poly z0 = z(n, 0), z1 = z(n, 1);
    Poly a = z0 * z1 * (z0 - z1);
    Poly b = z0 * (z0 - z1);
    Poly g = poly_gcd(a, b);
    // factor by inspection: z0(z0-z1) = z0^2 - z0 z1; check both divisibilities
    // and coprime cofactors instead of trusting the factorization.
    CHECK(g == z0 * z0 - z0 * z1);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    Poly ca = *exact_div(a, g), cb = *exact_div(b, g);
    CHECK(poly_gcd(ca, cb).is_constant());

    CHECK(poly_gcd(a, Poly(n)) == normalize_monic(a));
    CHECK(poly_gcd(z0 + c(n, 1), z0 - c(n, 1)) == c(n, 1));
}

TEST_CASE("gcd random products share the planted factor") {
    for (int iter = 0; iter < 40; ++iter) {
        int n = 3;
        Poly f = random_poly(n, 2, 3);
        if (f.is_zero()) continue;
        Poly a = f * random_poly(n, 2, 3);
        Poly b = f * random_poly(n, 2, 3);
        Poly g = poly_gcd(a, b);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        CHECK(divides(f, g));  // planted factor divides the gcd
    }
}

TEST_CASE("eval and homogeneity") {
    int n = 2;
    Poly p = z(n, 0) * z(n, 0) + z(n, 1);
    CHECK(p.eval({Rat(2), Rat(3)}) == Rat(7));
    CHECK_FALSE(p.is_homogeneous());
    CHECK(gordan_noether().is_homogeneous() == std::optional<int>(3));
    CHECK_THROWS(p.eval({Rat(1)}));
}

TEST_CASE("ring axioms on random polys") {
    for (int iter = 0; iter < 120; ++iter) {
        int n = 1 + iter % 5;
        Poly a = random_poly(n, 4, 4), b = random_poly(n, 4, 4), cc = random_poly(n, 4, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + cc == a + (b + cc));
        CHECK((a * b) * cc == a * (b * cc));
        CHECK(a * (b + cc) == a * b + a * cc);
        auto pt = random_point(n);
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    }
}

TEST_CASE("euler relation for homogeneous polynomials") {
    Poly p = gordan_noether();
    CHECK(euler_apply(p) == Rat(3) * p);
    for (int iter = 0; iter < 30; ++iter) {
        Poly q = random_poly(4, 3, 4);
        auto h = q.is_homogeneous();
        if (!h || q.is_zero()) continue;
        CHECK(euler_apply(q) == Rat(*h) * q);
    }
}

TEST_CASE("gcd divisibility round-trips") {
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + iter % 3;
        Poly a = random_poly(n, 3, 3), b = random_poly(n, 3, 3);
        Poly g = poly_gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        if (!a.is_zero()) CHECK(*exact_div(a, g) * g == a);
    }
}

TEST_CASE("substitution and homogenization") {
    int n = 3;
    Poly p = z(n, 0) * z(n, 0) * z(n, 1) + z(n, 2);
    Poly s = p.substitute(2, Rat(1));
    CHECK(s == z(n, 0) * z(n, 0) * z(n, 1) + c(n, 1));
    CHECK(s.homogenize(2, 3) == p * Rat(1) + z(n, 2).pow(3) - z(n, 2));
    Poly affine = z(n, 0) + z(n, 1) * z(n, 1);
    CHECK(affine.homogenize(2, 2) == z(n, 0) * z(n, 2) + z(n, 1) * z(n, 1));
}
