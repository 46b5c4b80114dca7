#include <doctest.h>

#include "milnor/invariants.hpp"
#include "milnor/parser.hpp"
#include "test_helpers.hpp"

using namespace milnor;
using milnor::testing::rng;

namespace {
const VarSet kXY{Var::x, Var::y};

bool cluster_has_root(const ValueCluster& vc, const Rat& r) {
    return vc.defining.evaluated_at(r).is_zero();
}
}  // namespace

TEST_CASE("delta pencil basics") {
    // f = x^2 + y^2: Delta = 4s - 4x^2, k = 2, q1 = -4
    DeltaPencil dp = delta_pencil(parse_poly("x^2 + y^2", kXY));
    CHECK(dp.k == 2);
    CHECK(dp.shear.slope == 0);
    UniPoly q1 = dp.q(1);
    CHECK(q1.degree() == 0);
    CHECK(q1.coeff(0).constant_value() == -4);
    UniPoly q3 = dp.q(3);  // coefficient of x^0 is 4s
    CHECK(q3.degree() == 1);

    // f = y: Delta = 1, k = 0
    DeltaPencil dp1 = delta_pencil(parse_poly("y", kXY));
    CHECK(dp1.k == 0);

    CHECK_THROWS_AS(delta_pencil(parse_poly("5", kXY)), input_error);
}

TEST_CASE("delta pencil of the first example") {
    // t = 0: k = mu + lambda + d - 1 = 0 + 1 + 4 - 1 = 4, q1 has the single root 0
    DeltaPencil dp = delta_pencil(parse_poly("x^3*y + x", kXY));
    CHECK(dp.k == 4);
    auto clusters = b_infinity_clusters(dp);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].defining.degree() == 1);
    CHECK(cluster_has_root(clusters[0], Rat(0)));
    CHECK(clusters[0].lambda_c == 1);
}

TEST_CASE("b_infinity examples") {
    CHECK(b_infinity_clusters(delta_pencil(parse_poly("x^2 + y^2", kXY))).empty());

    // second example at t = 0: f = x(xy+1), B_inf = {0}
    auto cl = b_infinity_clusters(delta_pencil(parse_poly("x*(x*y + 1)", kXY)));
    REQUIRE(cl.size() == 1);
    CHECK(cluster_has_root(cl[0], Rat(0)));
    CHECK(cl[0].lambda_c == 1);
}

TEST_CASE("b_affine examples") {
    // Morse: B_aff = {0}, mu_0 = 1
    auto morse = b_affine_clusters(affine_critical_points(parse_poly("x^2 + y^2", kXY)));
    REQUIRE(morse.size() == 1);
    CHECK(cluster_has_root(morse[0], Rat(0)));
    CHECK(morse[0].mu_c == 1);

    // second example at t = 1: B_aff = {0, 1}, mu 1 each
    auto ex2 = b_affine_clusters(affine_critical_points(parse_poly("(x + 1)*(x*y + 1)", kXY)));
    int total = 0;
    bool root0 = false, root1 = false;
    for (const auto& vc : ex2) {
        total += vc.mu_c * vc.value_count();
        if (cluster_has_root(vc, Rat(0))) {
            root0 = true;
            CHECK(vc.mu_c == 1);
        }
        if (cluster_has_root(vc, Rat(1))) {
            root1 = true;
            CHECK(vc.mu_c == 1);
        }
    }
    CHECK(total == 2);
    CHECK(root0);
    CHECK(root1);

    // first example at t = 1: no affine critical points
    CHECK(b_affine_clusters(affine_critical_points(parse_poly("x^3*y + x^2 + x", kXY))).empty());
}

TEST_CASE("invariant record: x^2 + y^2") {
    InvariantRecord rec = invariant_record(parse_poly("x^2 + y^2", kXY));
    CHECK(rec.d == 2);
    CHECK(rec.k == 2);
    CHECK(rec.mu == 1);
    CHECK(rec.lambda == 0);
    CHECK(rec.wedge == 1);
    CHECK(rec.b_aff.values.cardinality == 1);
    CHECK(rec.b_inf.values.cardinality == 0);
    CHECK(rec.b.cardinality == 1);
    CHECK(rec.sigma_point_count == 0);
}

TEST_CASE("invariant record: first example at t=1") {
    InvariantRecord rec = invariant_record(parse_poly("x*(x^2*y + x + 1)", kXY));
    CHECK(rec.d == 4);
    CHECK(rec.k == 4);
    CHECK(rec.mu == 0);
    CHECK(rec.lambda == 1);
    CHECK(rec.wedge == 1);
    CHECK(rec.b_aff.values.cardinality == 0);
    REQUIRE(rec.b_inf.values.cardinality == 1);
    CHECK(rec.b_inf.values.boxes[0].box().contains(ComplexBox::point(Rat(0), Rat(0))));
    CHECK(rec.b.cardinality == 1);
    CHECK(rec.sigma_point_count == 1);
}

TEST_CASE("invariant record: third example at t=0") {
    InvariantRecord rec = invariant_record(parse_poly("x^2*y + x", kXY));
    CHECK(rec.d == 3);
    CHECK(rec.k == 3);
    CHECK(rec.mu == 0);
    CHECK(rec.lambda == 1);
    REQUIRE(rec.b_inf.clusters.size() == 1);
    CHECK(cluster_has_root(rec.b_inf.clusters[0], Rat(0)));
}

TEST_CASE("invariant record rejects families and constants") {
    CHECK_THROWS_AS(invariant_record(parse_poly("x^3*y + t*x^2 + x",
                                                VarSet{Var::x, Var::y, Var::t})),
                    input_error);
    CHECK_THROWS_AS(invariant_record(parse_poly("7", kXY)), input_error);
}

TEST_CASE("euler check verifies every cluster of the paper examples") {
    for (const char* text : {"x^2 + y^2", "x*(x^2*y + x + 1)", "(x + 1)*(x*y + 1)"}) {
        InvariantRecord rec = invariant_record(parse_poly(text, kXY));
        for (size_t i = 0; i < rec.b_clusters.size(); ++i)
            CHECK(euler_check(rec, i) == EulerCheckResult::verified);
    }
}

TEST_CASE("shear independence of the pencil invariants") {
    for (const char* text : {"x^2 + y^2", "x*(x^2*y + x + 1)", "(x + 1)*(x*y + 1)"}) {
        MPoly f = parse_poly(text, kXY);
        DeltaPencil a = delta_pencil(f);
        DeltaPencil b = delta_pencil(f, false, static_cast<int>(a.shear.slope.get_num().get_si()) >= 0
                                                   ? 3
                                                   : 4);
        CHECK(a.shear.slope != b.shear.slope);
        CHECK(a.k == b.k);
        auto ca = b_infinity_clusters(a);
        auto cb = b_infinity_clusters(b);
        REQUIRE(ca.size() == cb.size());
        for (size_t i = 0; i < ca.size(); ++i) {
            CHECK(ca[i].defining == cb[i].defining);
            CHECK(ca[i].lambda_c == cb[i].lambda_c);
        }
    }
}

TEST_CASE("k-identity on random polynomials with isolated singularities") {
    std::uniform_int_distribution<int> coeff(-4, 4);
    int done = 0, attempts = 0;
    while (done < 25 && attempts < 400) {
        ++attempts;
        MPoly f = milnor::testing::random_mpoly(kXY, 5, 6, 4);
        if (f.degree_in(kXY) < 1) continue;
        try {
            InvariantRecord rec = invariant_record(f);
            CHECK(rec.k == rec.mu + rec.lambda + rec.d - 1);  // asserted inside too
            ++done;
        } catch (const nonisolated_error&) {
            continue;  // rejection sampling
        } catch (const input_error&) {
            continue;
        }
    }
    CHECK(done >= 25);
}
