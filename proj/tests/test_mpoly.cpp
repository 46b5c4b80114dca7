#include <doctest.h>

#include "milnor/mpoly.hpp"
#include "milnor/parser.hpp"
#include "test_helpers.hpp"

using namespace milnor;
using milnor::testing::random_mpoly;
using milnor::testing::rng;

namespace {
const VarSet kXY{Var::x, Var::y};
const VarSet kXYT{Var::x, Var::y, Var::t};

MPoly P(const std::string& s) { return parse_poly(s, kXYT); }
MPoly Pxy(const std::string& s) { return parse_poly(s, kXY); }
}  // namespace

TEST_CASE("arith basics") {
    CHECK(Pxy("x + y") + Pxy("x - y") == Pxy("2*x"));
    CHECK(Pxy("(x + y)*(x - y)") == Pxy("x^2 - y^2"));
    CHECK(P("0") * P("x^3*y + t*x^2 + x") == P("0"));
    CHECK_THROWS_AS(Pxy("x") + P("x"), input_error);  // variable-list mismatch
}

TEST_CASE("ring axioms on random polynomials") {
    for (int i = 0; i < 50; ++i) {
        MPoly p = random_mpoly(kXYT, 4, 5);
        MPoly q = random_mpoly(kXYT, 4, 5);
        MPoly r = random_mpoly(kXYT, 4, 5);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("partial derivatives") {
    CHECK(Pxy("x^2 + y^2").partial(Var::x) == Pxy("2*x"));
    CHECK(P("x^3*y + t*x^2 + x").partial(Var::y) == P("x^3"));
    CHECK(P("7").partial(Var::x) == P("0"));
    CHECK_THROWS_AS(Pxy("x").partial(Var::t), input_error);
}

TEST_CASE("degree forms") {
    auto forms = P("x^3*y + t*x^2 + x").degree_forms(kXY);
    REQUIRE(forms.size() == 5);  // degrees 4..0
    CHECK(forms[0] == P("x^3*y"));
    CHECK(forms[1] == P("0"));
    CHECK(forms[2] == P("t*x^2"));
    CHECK(forms[3] == P("x"));
    CHECK(forms[4] == P("0"));

    auto f2 = Pxy("x^2 + y^2").degree_forms(kXY);
    REQUIRE(f2.size() == 3);
    CHECK(f2[0] == Pxy("x^2 + y^2"));

    auto fc = Pxy("5").degree_forms(kXY);
    REQUIRE(fc.size() == 1);
    CHECK(fc[0] == Pxy("5"));

    CHECK(Pxy("0").degree_forms(kXY).empty());
}

TEST_CASE("degree forms sum to input and are homogeneous") {
    for (int i = 0; i < 30; ++i) {
        MPoly p = random_mpoly(kXYT, 5, 6);
        auto forms = p.degree_forms(kXY);
        MPoly sum(p.vars());
        int d = p.degree_in(kXY);
        for (size_t j = 0; j < forms.size(); ++j) {
            sum = sum + forms[j];
            if (!forms[j].is_zero()) {
                int fd = d - static_cast<int>(j);
                for (const auto& [m, c] : forms[j].terms())
                    CHECK(static_cast<int>(m.degree_in(kXY)) == fd);
            }
        }
        CHECK(sum == p);
    }
}

TEST_CASE("homogenization") {
    VarSet xyx0{Var::x, Var::y, Var::x0};
    MPoly h = Pxy("x^2 + y^2").homogenized(kXY, Var::x0);
    CHECK(h == Pxy("x^2 + y^2").promoted(xyx0));

    MPoly f = P("x^3*y + t*x^2 + x");
    MPoly hf = f.homogenized(kXY, Var::x0);
    VarSet all{Var::x, Var::y, Var::x0, Var::t};
    MPoly expect = parse_poly("x^3*y", kXYT).promoted(all) +
                   parse_poly("t*x^2", kXYT).promoted(all) *
                       MPoly::variable(all, Var::x0).pow(2) +
                   parse_poly("x", kXYT).promoted(all) * MPoly::variable(all, Var::x0).pow(3);
    CHECK(hf == expect);

    MPoly one = Pxy("x + 1").homogenized(kXY, Var::x0);
    CHECK(one == MPoly::variable(xyx0, Var::x) + MPoly::variable(xyx0, Var::x0));

    CHECK_THROWS_AS(Pxy("3").homogenized(kXY, Var::x0), input_error);
}

TEST_CASE("homogenize then x0=1 is the identity") {
    for (int i = 0; i < 30; ++i) {
        MPoly p = random_mpoly(kXY, 6, 6);
        if (p.degree_in(kXY) < 1) continue;
        MPoly h = p.homogenized(kXY, Var::x0);
        // homogeneous of degree d
        int d = p.degree_in(kXY);
        for (const auto& [m, c] : h.terms()) CHECK(static_cast<int>(m.total_degree()) == d);
        MPoly back = h.substituted(Var::x0, Rat(1)).restricted(kXY);
        CHECK(back == p);
    }
}

TEST_CASE("shears") {
    Shear sh{Var::y, Var::x, Rat(1)};
    CHECK(Pxy("x^2*y").sheared(sh) == Pxy("x^2*y + 2*x*y^2 + y^3"));
    CHECK(Pxy("x^2*y").sheared(sh).degree_in(Var::y) == 3);

    Shear id{Var::y, Var::x, Rat(0)};
    MPoly p = P("x^3*y + t*x^2 + x");
    CHECK(p.sheared(id) == p);

    for (int i = 0; i < 20; ++i) {
        MPoly q = random_mpoly(kXYT, 5, 6);
        Shear s2{Var::y, Var::x, Rat(i % 5 - 2)};
        CHECK(q.sheared(s2).sheared(s2.inverse()) == q);
        CHECK(q.sheared(s2).degree_in(kXY) == q.degree_in(kXY));
    }
}

TEST_CASE("make_y_monic") {
    auto r1 = make_y_monic(Pxy("x^2 + y^2"));
    CHECK(r1.shear.slope == 0);
    CHECK(r1.poly == Pxy("x^2 + y^2"));

    // degree form x^3*y: slope 0 fails, slope 1 succeeds
    auto r2 = make_y_monic(Pxy("x^3*y"));
    CHECK(r2.shear.slope == 1);
    CHECK(r2.poly.degree_in(Var::y) == 4);
    CHECK(r2.leading.is_constant());
    CHECK(r2.leading.constant_value() == 1);

    auto r3 = make_y_monic(Pxy("y^4 + x"));
    CHECK(r3.shear.slope == 0);
    CHECK(r3.poly == Pxy("y^4 + x"));
}

TEST_CASE("make_y_monic on 200 random inputs") {
    int done = 0;
    while (done < 200) {
        MPoly p = random_mpoly(kXY, 8, 7);
        if (p.degree_in(kXY) < 1) continue;
        ++done;
        auto r = make_y_monic(p);
        int d = p.degree_in(kXY);
        CHECK(r.poly.degree_in(Var::y) == d);
        CHECK(r.poly.degree_in(kXY) == d);
        CHECK(r.poly.coeff_of(Var::y, static_cast<unsigned>(d)).is_constant());
    }
}

TEST_CASE("make_y_monic with parameter: Example 3 degree form") {
    // t*x^4 admits no slope with a t-free leading coefficient
    MPoly f = P("x^2*y + t*x^4 + x");
    CHECK_THROWS_AS(make_y_monic(f, /*require_constant=*/true, 8), internal_error);
    auto r = make_y_monic(f, /*require_constant=*/false);
    CHECK(r.poly.degree_in(Var::y) == 4);
    CHECK(!r.leading.is_constant());
    CHECK(r.leading.degree_in(Var::t) == 1);
}

TEST_CASE("canonical serialization") {
    CHECK(P("x^3*y + t*x^2 + x").str() == "x^3*y + t*x^2 + x");
    CHECK(Pxy("0").str() == "0");
    CHECK(Pxy("x - y").str() == "x - y");
    CHECK(Pxy("-x + 1/2").str() == "-1*x + 1/2");  // leading minus needs the
                                                   // coefficient: -x^2 would
                                                   // otherwise reparse as (-x)^2
    for (int i = 0; i < 30; ++i) {
        MPoly p = random_mpoly(kXYT, 5, 6);
        CHECK(parse_poly(p.str(), kXYT) == p);
    }
}
