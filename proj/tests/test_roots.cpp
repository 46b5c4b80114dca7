#include <doctest.h>

#include <algorithm>

#include "milnor/roots.hpp"
#include "test_helpers.hpp"

using namespace milnor;
using milnor::testing::rng;

namespace {

UniPoly s_poly(const std::vector<Rat>& coeffs) {
    VarSet cv;
    std::vector<MPoly> cs;
    for (const auto& c : coeffs) cs.push_back(MPoly::constant(cv, c));
    return UniPoly(Var::s, cv, cs);
}

UniPoly linear_factor_product(const std::vector<Rat>& roots) {
    UniPoly acc = s_poly({Rat(1)});
    for (const auto& r : roots) acc = acc * s_poly({-r, Rat(1)});
    return acc;
}

bool box_contains(const RootBox& b, const Rat& re, const Rat& im) {
    return rat_abs(b.cre - re) <= b.radius && rat_abs(b.cim - im) <= b.radius;
}

}  // namespace

TEST_CASE("isolate simple rational roots") {
    auto set = isolate(s_poly({Rat(-1), Rat(0), Rat(1)}), Rat(1, 1000));  // s^2 - 1
    REQUIRE(set.cardinality == 2);
    CHECK(box_contains(set.boxes[0], Rat(-1), Rat(0)));
    CHECK(box_contains(set.boxes[1], Rat(1), Rat(0)));
    for (const auto& b : set.boxes) {
        CHECK(b.multiplicity == 1);
        CHECK(b.radius <= Rat(1, 1000));
    }
    CHECK(set.boxes[0].box().disjoint(set.boxes[1].box()));
}

TEST_CASE("isolate with multiplicity") {
    auto set = isolate(s_poly({Rat(0), Rat(0), Rat(0), Rat(1)}), Rat(1, 1000));  // s^3
    REQUIRE(set.cardinality == 1);
    CHECK(set.boxes[0].multiplicity == 3);
    CHECK(box_contains(set.boxes[0], Rat(0), Rat(0)));
}

TEST_CASE("isolate complex pair") {
    auto set = isolate(s_poly({Rat(1), Rat(0), Rat(1)}), Rat(1, 1000));  // s^2 + 1
    REQUIRE(set.cardinality == 2);
    CHECK(box_contains(set.boxes[0], Rat(0), Rat(-1)));
    CHECK(box_contains(set.boxes[1], Rat(0), Rat(1)));
}

TEST_CASE("interval evaluation of defining factor contains zero on every box") {
    auto set = isolate(s_poly({Rat(2), Rat(-3), Rat(0), Rat(1), Rat(1)}), Rat(1, 4096));
    int degree_sum = 0;
    for (const auto& [f, m] : set.defining.factors) degree_sum += f.degree() * m;
    CHECK(degree_sum == 4);
    for (const auto& b : set.boxes) {
        const auto& fac = set.defining.factors[static_cast<size_t>(b.defining_factor)].first;
        ComplexBox val = cb_eval_poly(fac.rational_coeff_values(), b.box(), -1);
        CHECK(val.contains_zero());
    }
}

TEST_CASE("sum of multiplicities equals the degree") {
    std::uniform_int_distribution<int> small(-6, 6);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int trial = 0; trial < 8; ++trial) {
        UniPoly p = s_poly({Rat(1)});
        int deg = 0;
        std::vector<Rat> used;
        for (int i = 0; i < 3; ++i) {
            Rat r(small(rng()));
            if (std::find(used.begin(), used.end(), r) != used.end()) continue;
            used.push_back(r);
            int m = mult(rng());
            for (int k = 0; k < m; ++k) p = p * s_poly({-r, Rat(1)});
            deg += m;
        }
        if (deg == 0) continue;
        auto set = isolate(p, Rat(1, 1 << 20));
        int total = 0;
        for (const auto& b : set.boxes) total += b.multiplicity;
        CHECK(total == deg);
        CHECK(static_cast<int>(set.boxes.size()) == static_cast<int>(used.size()));
    }
}

TEST_CASE("oracle equivalence on products of distinct linear factors") {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<int> count(2, 6);
    for (int trial = 0; trial < 10; ++trial) {
        int n = count(rng());
        std::vector<Rat> roots;
        while (static_cast<int>(roots.size()) < n) {
            Rat r(num(rng()), den(rng()));
            r.canonicalize();
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        auto set = isolate(linear_factor_product(roots), Rat(1, 1000000));
        REQUIRE(set.cardinality == n);
        for (const auto& r : roots) {
            int hits = 0;
            for (const auto& b : set.boxes)
                if (box_contains(b, r, Rat(0))) ++hits;
            CHECK(hits == 1);
        }
        for (const auto& b : set.boxes) CHECK(b.multiplicity == 1);
    }
}

TEST_CASE("refine keeps roots nested and shrinks radii") {
    auto set = isolate(s_poly({Rat(-1), Rat(0), Rat(1)}), Rat(1, 8));
    auto fine = refine(set, Rat(1, 1000000));
    REQUIRE(fine.boxes.size() == set.boxes.size());
    for (size_t i = 0; i < fine.boxes.size(); ++i) {
        CHECK(fine.boxes[i].radius <= Rat(1, 1000000));
        CHECK(set.boxes[i].box().contains(fine.boxes[i].box()));
    }
    // refine to larger precision: unchanged set allowed
    auto loose = refine(fine, Rat(1, 8));
    for (size_t i = 0; i < loose.boxes.size(); ++i)
        CHECK(loose.boxes[i].radius <= fine.boxes[i].radius);
}

TEST_CASE("match_values") {
    auto a = isolate(linear_factor_product({Rat(0), Rat(1)}), Rat(1, 1024));
    auto b = isolate(linear_factor_product({Rat(1, 100), Rat(99, 100)}), Rat(1, 1024));
    auto m = match_values(a, b);
    CHECK(m.conclusive);
    REQUIRE(m.matched.size() == 2);
    CHECK(m.unmatched_a.empty());
    CHECK(m.unmatched_b.empty());
    // 0 <-> 1/100 and 1 <-> 99/100
    for (auto [i, j] : m.matched) {
        Rat da = rat_abs(a.boxes[static_cast<size_t>(i)].cre - b.boxes[static_cast<size_t>(j)].cre);
        CHECK(da < Rat(1, 2));
    }

    AlgebraicValueSet empty;
    empty.variable = Var::s;
    auto m2 = match_values(a, empty);
    CHECK(m2.conclusive);
    CHECK(m2.matched.empty());
    CHECK(m2.unmatched_a.size() == 2);
}
