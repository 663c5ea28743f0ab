#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lfoliate/exterior.hpp"
#include "lfoliate/linalg.hpp"

using namespace lfoliate;

namespace {

Poly z(int nvars, int i) { return Poly::variable(nvars, i); }

std::mt19937 rng(74523901);

Poly random_poly(int nvars, int max_deg) {
    std::uniform_int_distribution<int> nt(0, 3);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> ex(0, max_deg);
    Poly p(nvars);
    int terms = 1 + nt(rng);
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

KForm random_form(int k, int nvars, int max_deg) {
    KForm f(k, nvars);
    std::uniform_int_distribution<int> pick(0, nvars - 1);
    for (int t = 0; t < 3; ++t) {
        IdxTuple idx;
        while ((int)idx.size() < k) {
            int i = pick(rng);
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
        }
        f.add_term(idx, random_poly(nvars, max_deg));
    }
    return f;
}

VField random_field(int nvars, int max_deg) {
    VField x(nvars);
    for (int i = 0; i < nvars; ++i) x.set_component(i, random_poly(nvars, max_deg));
    return x;
}

LinField random_linfield(int nvars) {
    std::uniform_int_distribution<int> coef(-3, 3);
    RatMat m = mat_zero(nvars, nvars);
    for (auto& row : m)
        for (auto& e : row) e = Rat(coef(rng));
    return LinField(m);
}

// The four Gordan-Noether fields on C^5 (z1..z5 as indices 0..4).
std::vector<VField> gn_fields() {
    int n = 5;
    VField x1(n), x2(n), x3(n), x4(n);
    x1.set_component(2, z(n, 1));
    x1.set_component(3, -z(n, 0));
    x2.set_component(3, z(n, 1));
    x2.set_component(4, -z(n, 0));
    x3.set_component(0, z(n, 0));
    x3.set_component(2, Rat(-2) * z(n, 2));
    x3.set_component(3, -z(n, 3));
    x4.set_component(1, z(n, 1));
    x4.set_component(3, -z(n, 3));
    x4.set_component(4, Rat(-2) * z(n, 4));
    return {x1, x2, x3, x4};
}

Poly gordan_noether() {
    int n = 5;
    return z(n, 0) * z(n, 0) * z(n, 2) + z(n, 0) * z(n, 1) * z(n, 3) + z(n, 1) * z(n, 1) * z(n, 4);
}

// Defining form of the abelian case (v) on CP(3) at kappa = 0 (§4.2.1 shape):
// -z3^3 dz0 + z2 z3^2 dz1 + z3(z1z3 - z2^2) dz2 + (z0z3^2 - 2z1z2z3 + z2^3) dz3.
KForm abv_form() {
    int n = 4;
    Poly z0 = z(n, 0), z1 = z(n, 1), z2 = z(n, 2), z3 = z(n, 3);
    KForm w(1, n);
    w.add_term({0}, -z3.pow(3));
    w.add_term({1}, z2 * z3 * z3);
    w.add_term({2}, z3 * (z1 * z3 - z2 * z2));
    w.add_term({3}, z0 * z3 * z3 - Rat(2) * z1 * z2 * z3 + z2.pow(3));
    return w;
}

}  // namespace

TEST_CASE("wedge basics") {
    int n = 3;
    KForm dz0 = KForm::basis(n, {0}), dz1 = KForm::basis(n, {1});
    CHECK(wedge(wedge(dz0, dz1), dz0).is_zero());
    CHECK(wedge(dz0, dz1) == -wedge(dz1, dz0));

    // (z0 dz1 - z1 dz0) ^ d(z0 dz1 - z1 dz0) vanishes: only two essential variables.
    int m = 2;
    KForm w(1, m);
    w.add_term({1}, z(m, 0));
    w.add_term({0}, -z(m, 1));
    CHECK(wedge(w, ext_d(w)).is_zero());
}

TEST_CASE("exterior derivative") {
    int n = 2;
    KForm w(1, n);
    w.add_term({1}, z(n, 0));
    w.add_term({0}, -z(n, 1));
    KForm expect(2, n);
    expect.add_term({0, 1}, Poly::constant(n, Rat(2)));
    CHECK(ext_d(w) == expect);

    for (int iter = 0; iter < 20; ++iter) {
        Poly p = random_poly(4, 3);
        CHECK(ext_d(d_of(p)).is_zero());
    }

    // Cleared logarithmic 1-form with sum of residues zero: w ^ dw = 0.
    int m = 3;
    Poly z0 = z(m, 0), z1 = z(m, 1), z2 = z(m, 2);
    Rat l0(1), l1(2), l2(-3);  // l0+l1+l2 = 0
    KForm lw(1, m);
    lw.add_term({0}, l0 * z1 * z2);
    lw.add_term({1}, l1 * z0 * z2);
    lw.add_term({2}, l2 * z0 * z1);
    CHECK(wedge(lw, ext_d(lw)).is_zero());
}

TEST_CASE("d twice is zero on random forms") {
    for (int iter = 0; iter < 100; ++iter) {
        int n = 3 + iter % 2;
        int k = iter % n;
        KForm a = random_form(k, n, 3);
        CHECK(ext_d(ext_d(a)).is_zero());
    }
}

TEST_CASE("wedge graded anticommutativity") {
    for (int iter = 0; iter < 100; ++iter) {
        int n = 4;
        int ka = iter % 3, kb = (iter / 3) % 3;
        KForm a = random_form(ka, n, 2), b = random_form(kb, n, 2);
        KForm lhs = wedge(a, b);
        KForm rhs = wedge(b, a);
        if ((ka * kb) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("interior product") {
    int n = 2;
    KForm w(1, n);
    w.add_term({1}, z(n, 0));
    w.add_term({0}, -z(n, 1));
    CHECK(interior(VField::radial(n), w).coefficient({}).is_zero());

    for (int iter = 0; iter < 50; ++iter) {
        int m = 4;
        VField x = random_field(m, 2);
        KForm a = random_form(2, m, 2);
        CHECK(interior(x, interior(x, a)).coefficient({}).is_zero());
    }

    KForm abv = abv_form();
    KForm lhs = interior(VField::radial(4), ext_d(abv));
    CHECK(lhs == Rat(4) * abv);  // i_R dw = (nu+2) w with nu = 2
    CHECK_THROWS(interior(VField::radial(2), KForm::from_poly(z(2, 0))));
}

TEST_CASE("interior is an antiderivation") {
    for (int iter = 0; iter < 100; ++iter) {
        int n = 4;
        int ka = 1 + iter % 2, kb = 1 + (iter / 2) % 2;
        KForm a = random_form(ka, n, 2), b = random_form(kb, n, 2);
        VField x = random_field(n, 1);
        KForm lhs = interior(x, wedge(a, b));
        KForm rhs = wedge(interior(x, a), b);
        KForm second = wedge(a, interior(x, b));
        if (ka % 2 == 1) second = -second;
        rhs += second;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lie derivative") {
    KForm abv = abv_form();
    // L_R w = (deg w + 1) w for homogeneous w annihilating R; coefficients have degree 3.
    CHECK(lie_derivative(VField::radial(4), abv) == Rat(4) * abv);

    for (int iter = 0; iter < 40; ++iter) {
        int n = 4;
        VField x = random_field(n, 2);
        KForm a = random_form(1 + iter % 2, n, 2);
        CHECK(lie_derivative(x, ext_d(a)) == ext_d(lie_derivative(x, a)));
    }

    // L_X dC = 3 dC for C = z0 + z1 z2 + z2^3 and X = 3z0 d/dz0 + 2z1 d/dz1 + z2 d/dz2.
    int n = 3;
    Poly C = z(n, 0) + z(n, 1) * z(n, 2) + z(n, 2).pow(3);
    VField x(n);
    x.set_component(0, Rat(3) * z(n, 0));
    x.set_component(1, Rat(2) * z(n, 1));
    x.set_component(2, z(n, 2));
    CHECK(lie_derivative(x, d_of(C)) == Rat(3) * d_of(C));
}

TEST_CASE("lie derivative is a derivation of the wedge") {
    for (int iter = 0; iter < 40; ++iter) {
        int n = 4;
        VField x = random_field(n, 1);
        KForm a = random_form(1, n, 2), b = random_form(1, n, 2);
        KForm lhs = lie_derivative(x, wedge(a, b));
        KForm rhs = wedge(lie_derivative(x, a), b) + wedge(a, lie_derivative(x, b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("brackets of the gordan-noether fields") {
    auto xs = gn_fields();
    CHECK(bracket(xs[0], xs[2]) == Rat(-2) * xs[0]);  // [X1,X3] = -2X1
    CHECK(bracket(xs[0], xs[1]).is_zero());           // [X1,X2] = 0
    CHECK(bracket(xs[0], xs[3]) == Rat(-1) * xs[0]);  // [X1,X4] = -X1
    CHECK(bracket(xs[1], xs[2]) == Rat(-1) * xs[1]);  // [X2,X3] = -X2
    CHECK(bracket(xs[1], xs[3]) == Rat(-2) * xs[1]);  // [X2,X4] = -2X2
    CHECK(bracket(xs[2], xs[3]).is_zero());           // [X3,X4] = 0
    CHECK(bracket(xs[0], xs[0]).is_zero());
}

TEST_CASE("apply") {
    auto xs = gn_fields();
    Poly P = gordan_noether();
    for (auto& x : xs) CHECK(apply(x, P).is_zero());
    CHECK(apply(VField::radial(5), P) == Rat(3) * P);
    // (z2 d/dz3 - z1 d/dz4)(z1 z2) = 0 : the field touches only absent variables.
    VField x(5);
    x.set_component(2, z(5, 1));
    x.set_component(3, -z(5, 0));
    CHECK(apply(x, z(5, 0) * z(5, 1)) == apply(xs[0], z(5, 0) * z(5, 1)));
}

TEST_CASE("cartan magic formula cross-check") {
    for (int iter = 0; iter < 40; ++iter) {
        int n = 3;
        VField x = random_field(n, 1);
        KForm a = random_form(1, n, 2);
        CHECK(lie_derivative(x, a) == interior(x, ext_d(a)) + ext_d(interior(x, a)));
    }
}

TEST_CASE("jacobi identity and the matrix correspondence") {
    for (int iter = 0; iter < 100; ++iter) {
        int n = 4;
        LinField a = random_linfield(n), b = random_linfield(n), c = random_linfield(n);
        VField j = bracket(bracket(a.field(), b.field()), c.field());
        j = j + bracket(bracket(b.field(), c.field()), a.field());
        j = j + bracket(bracket(c.field(), a.field()), b.field());
        CHECK(j.is_zero());
        // [X,Y] corresponds to BA - AB
        CHECK(lin_bracket(a, b).field() == bracket(a.field(), b.field()));
    }
}

TEST_CASE("linfield round trip") {
    LinField r = *LinField::from_field(VField::radial(3));
    CHECK(r.matrix() == mat_identity(3));
    VField quad(2);
    quad.set_component(0, z(2, 0) * z(2, 0));
    CHECK_FALSE(LinField::from_field(quad).has_value());
}

TEST_CASE("form rendering") {
    int n = 4;
    KForm f(2, n);
    f.add_term({0, 1}, Poly::constant(n, Rat(2)));
    f.add_term({1, 3}, z(n, 2));
    CHECK(render(f) == "(2)*dz0^dz1 + (z2)*dz1^dz3");
}
