#include <doctest.h>

#include "milnor/parser.hpp"
#include "milnor/singular.hpp"
#include "test_helpers.hpp"

using namespace milnor;
using milnor::testing::quotient_dimension_oracle;

namespace {
const VarSet kXY{Var::x, Var::y};
const VarSet kXYT{Var::x, Var::y, Var::t};

PlaneGerm germ_xy(const std::string& text) {
    return PlaneGerm{parse_poly(text, kXY), Var::x, Var::y};
}

bool contains_point(const ComplexBox& b, const Rat& re, const Rat& im) {
    return b.re.contains(re) && b.im.contains(im);
}
}  // namespace

TEST_CASE("sigma of a smooth-at-infinity polynomial is empty") {
    CHECK(sigma(parse_poly("x^2 + y^2", kXY)).empty());
    CHECK(sigma(parse_poly("x^2 - y^2 + x", kXY)).empty());
}

TEST_CASE("sigma of the first example family") {
    // one point (0:1:0) for every t
    MPoly f = parse_poly("x^3*y + t*x^2 + x", kXYT);
    SigmaSet sg = sigma(f);
    REQUIRE(sg.clusters.size() == 1);
    CHECK(sg.clusters[0].defining.degree() == 1);
    CHECK(sg.clusters[0].defining.evaluated_at(Rat(0)).is_zero());
    CHECK(!sg.has_x_point);
    CHECK(sg.degree_in_t == 0);
    CHECK(sg.point_count() == 1);

    MPoly f0 = parse_poly("x^3*y + x", kXY);
    SigmaSet sg0 = sigma(f0);
    CHECK(sg0.point_count() == 1);
    CHECK(sg0.clusters[0].defining.evaluated_at(Rat(0)).is_zero());
}

TEST_CASE("sigma of the third example at t=0") {
    SigmaSet sg = sigma(parse_poly("x^2*y + x", kXY));
    REQUIRE(sg.clusters.size() == 1);
    CHECK(sg.clusters[0].defining.degree() == 1);
    CHECK(sg.clusters[0].defining.evaluated_at(Rat(0)).is_zero());
    CHECK(!sg.has_x_point);
}

TEST_CASE("sigma defining equations hold on the output") {
    // substitute the cluster roots into the three forms: exact vanishing
    MPoly f = parse_poly("x^3*y + t*x^2 + x", kXYT);
    auto forms = f.degree_forms(kXY);
    MPoly A = forms[0].partial(Var::x).substituted(Var::y, Rat(1));
    MPoly B = forms[0].partial(Var::y).substituted(Var::y, Rat(1));
    MPoly C = forms[1].substituted(Var::y, Rat(1));
    SigmaSet sg = sigma(f);
    for (const auto& cl : sg.clusters) {
        for (const MPoly* form : {&A, &B, &C}) {
            if (form->is_zero()) continue;
            UniPoly fu = UniPoly::from_mpoly(form->restricted(form->vars().without(Var::y)), Var::x);
            UniPoly g = gcd_uni(cl.defining, fu.is_zero() ? cl.defining : fu);
            CHECK(g.degree() == cl.defining.degree());
        }
    }
}

TEST_CASE("local Milnor numbers of model germs") {
    CHECK(local_milnor(germ_xy("x^2 + y^2")).mu == 1);   // Morse
    CHECK(local_milnor(germ_xy("x^2 + y^3")).mu == 2);   // cusp
    CHECK(local_milnor(germ_xy("x^3 + y^3")).mu == 4);   // (3-1)(3-1)
    CHECK(local_milnor(germ_xy("x^2*y + y")).mu == 0);   // smooth at 0
    CHECK(local_milnor(germ_xy("x*y")).mu == 1);
    CHECK(local_milnor(germ_xy("x^2 - y^2")).mu == 1);
}

TEST_CASE("local Milnor matches the quotient-dimension oracle") {
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b) {
            MPoly g = MPoly::variable(kXY, Var::x).pow(static_cast<unsigned>(a)) +
                      MPoly::variable(kXY, Var::y).pow(static_cast<unsigned>(b));
            int mu = local_milnor(PlaneGerm{g, Var::x, Var::y}).mu;
            CHECK(mu == (a - 1) * (b - 1));
            CHECK(mu == quotient_dimension_oracle(g, Var::x, Var::y));
        }
    // a non-quasihomogeneous germ
    MPoly g = parse_poly("x^2*y + y^4", kXY);  // D5, mu = 5
    CHECK(local_milnor(PlaneGerm{g, Var::x, Var::y}).mu == 5);
    CHECK(quotient_dimension_oracle(g, Var::x, Var::y) == 5);
}

TEST_CASE("local Milnor is shear invariant") {
    for (int slope : {1, -2, 3}) {
        for (const char* text : {"x^2 + y^3", "x^3 + y^3", "x^2*y + y^4"}) {
            PlaneGerm g = germ_xy(text);
            PlaneGerm sheared{g.poly.sheared(Shear{Var::y, Var::x, Rat(slope)}), Var::x, Var::y};
            CHECK(local_milnor(g).mu == local_milnor(sheared).mu);
        }
    }
}

TEST_CASE("local Milnor rejects non-isolated germs") {
    CHECK_THROWS_AS(local_milnor(germ_xy("x^2")), nonisolated_error);
    CHECK_THROWS_AS(local_milnor(germ_xy("x^2*y^2")), nonisolated_error);
}

TEST_CASE("infinity chart of the first example") {
    MPoly f = parse_poly("x^3*y + t*x^2 + x", kXYT);
    PlaneGerm g = infinity_chart(f, SigmaPointRef{false, Rat(0)}, Rat(0));
    // x^3 + t x^2 x0^2 + x x0^3 (c = 0)
    VarSet vars = g.poly.vars();
    MPoly x = MPoly::variable(vars, Var::x);
    MPoly x0 = MPoly::variable(vars, Var::x0);
    MPoly t = MPoly::variable(vars, Var::t);
    MPoly expect = x.pow(3) + t * x.pow(2) * x0.pow(2) + x * x0.pow(3);
    CHECK(g.poly == expect);
    CHECK(g.u == Var::x);
    CHECK(g.v == Var::x0);

    // c = 0 specialization equals the s -> 0 substitution of the symbolic chart
    PlaneGerm sym = infinity_chart_symbolic(f, SigmaPointRef{false, Rat(0)});
    MPoly spec = sym.poly.substituted(Var::s, Rat(0));
    CHECK(spec.restricted(spec.vars().without(Var::s)) == g.poly);
}

TEST_CASE("nu and lambda for the first example") {
    MPoly f1 = parse_poly("x^3*y + x^2 + x", kXY);  // t = 1
    SigmaPointRef p{false, Rat(0)};
    int nu = nu_generic(f1, p);
    CHECK(nu >= 1);
    CHECK(lambda_at(f1, p, Rat(0)) == 1);  // lambda_0 = 1
    CHECK(lambda_at(f1, p, Rat(1)) == 0);  // generic value
    CHECK(lambda_at(f1, p, Rat(17)) == 0);
}

TEST_CASE("affine critical points: Morse") {
    auto data = affine_critical_points(parse_poly("x^2 + y^2", kXY));
    REQUIRE(data.points.size() == 1);
    CHECK(data.points[0].mu == 1);
    CHECK(contains_point(data.points[0].x, Rat(0), Rat(0)));
    CHECK(contains_point(data.points[0].y, Rat(0), Rat(0)));
    CHECK(contains_point(data.points[0].value, Rat(0), Rat(0)));
    CHECK(data.total_mu == 1);
}

TEST_CASE("affine critical points: first example has none") {
    auto data = affine_critical_points(parse_poly("x^3*y + x", kXY));  // t = 0
    CHECK(data.points.empty());
    CHECK(data.total_mu == 0);
}

TEST_CASE("affine critical points: second example at t=1") {
    auto data = affine_critical_points(parse_poly("(x + 1)*(x*y + 1)", kXY));
    REQUIRE(data.points.size() == 2);
    CHECK(data.total_mu == 2);
    bool found_a = false, found_b = false;
    for (const auto& p : data.points) {
        CHECK(p.mu == 1);
        if (contains_point(p.x, Rat(0), Rat(0)) && contains_point(p.y, Rat(-1), Rat(0))) {
            found_a = true;
            CHECK(contains_point(p.value, Rat(1), Rat(0)));
        }
        if (contains_point(p.x, Rat(-1), Rat(0)) && contains_point(p.y, Rat(1), Rat(0))) {
            found_b = true;
            CHECK(contains_point(p.value, Rat(0), Rat(0)));
        }
    }
    CHECK(found_a);
    CHECK(found_b);
}

TEST_CASE("affine critical points reject non-isolated input") {
    CHECK_THROWS_AS(affine_critical_points(parse_poly("x^2*y^2", kXY)), nonisolated_error);
}

TEST_CASE("cluster value polynomials have the critical values as roots") {
    auto data = affine_critical_points(parse_poly("(x + 1)*(x*y + 1)", kXY));
    REQUIRE(data.value_polys.size() == data.system.analysis.clusters.size());
    UniPoly product(Var::s, VarSet{}, {MPoly::constant(VarSet{}, 1)});
    for (const auto& vp : data.value_polys) product = product * vp;
    // values are 0 and 1
    CHECK(product.evaluated_at(Rat(0)).is_zero());
    CHECK(product.evaluated_at(Rat(1)).is_zero());
    CHECK(product.degree() == 2);
}
