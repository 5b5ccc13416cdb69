#include <doctest.h>

#include "stirsys/quotient.hpp"
#include "support.hpp"

using namespace stirsys;
using namespace test_support;

namespace {

PointSet ejemplito() {
    return pts({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

}  // namespace

TEST_CASE("set reduction: pos case") {
    PointSet R = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    ReductionResult rr = reduce_set(R, QuotientRel::pos_rel(1, 1));
    CHECK(rr.reduced.same_points(pts({{0, 0}, {1, 0}, {0, 1}})));
    CHECK(rr.r0 == 3);
    REQUIRE(rr.dropped_rows.size() == 1);
    CHECK(rr.dropped_rows[0].dropped == Point{1, 1});
    CHECK(rr.reduced.is_staircase());

    // pos reductions keep the monomial condition on every staircase
    for (int r = 1; r <= 5; ++r)
        for (const PointSet& S : all_staircases(r))
            for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 3; ++b)
                    CHECK(reduce_set(S, QuotientRel::pos_rel(a, b)).reduced.is_staircase());
}

TEST_CASE("set reduction: non-coprime directions merge along the primitive step") {
    // 2x+2y cuts the same locus as x+y, so (1,1) still collapses into (0,0)
    PointSet R = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    ReductionResult rr = reduce_set(R, QuotientRel::pos_rel(2, 2));
    CHECK(rr.r0 == 3);
    CHECK(rr.reduced.same_points(pts({{0, 0}, {1, 0}, {0, 1}})));
    MultiPoly det = det_quotient_closed_form(rr.reduced, QuotientRel::pos_rel(2, 2));
    CHECK_FALSE(det.is_zero());

    ReductionResult rn = reduce_set(R, QuotientRel::neg_rel(2, 2));
    CHECK(rn.r0 == 3);  // (1,0) and (0,1) merge under x = y
}

TEST_CASE("set reduction: neg case representative choices") {
    QuotientRel rel = QuotientRel::neg_rel(2, 3);
    ReductionResult rr = reduce_set(ejemplito(), rel);
    CHECK(rr.r0 == 7);
    CHECK(rr.reduced.same_points(counterexample_set()));  // smallest height drops (0,3)

    ReductionResult rl = reduce_set(ejemplito(), rel, RepPolicy::largest_height);
    CHECK(rl.reduced.same_points(
        pts({{0, 0}, {1, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}})));

    auto choices = all_rep_choices(ejemplito(), rel);
    REQUIRE(choices.size() == 2);
    bool fst = choices[0].same_points(rr.reduced) || choices[1].same_points(rr.reduced);
    bool snd = choices[0].same_points(rl.reduced) || choices[1].same_points(rl.reduced);
    CHECK(fst);
    CHECK(snd);

    // neither choice satisfies the monomial condition
    CHECK_FALSE(choices[0].is_staircase());
    CHECK_FALSE(choices[1].is_staircase());

    // classes carry the merged pair {(2,0),(0,3)}
    bool found = false;
    for (const auto& cls : rr.classes)
        if (cls.size() == 2) {
            found = true;
            CHECK(((cls[0] == Point{2, 0} && cls[1] == Point{0, 3}) ||
                   (cls[0] == Point{0, 3} && cls[1] == Point{2, 0})));
        }
    CHECK(found);
}

TEST_CASE("set reduction: axis cases") {
    for (int r = 1; r <= 5; ++r)
        for (const PointSet& R : all_staircases(r)) {
            ReductionResult rx = reduce_set(R, QuotientRel::x_zero());
            for (const Point& p : rx.reduced) CHECK(p.i == 0);
            for (const Point& p : R)
                if (p.i == 0) CHECK(rx.reduced.contains(p));
            ReductionResult ry = reduce_set(R, QuotientRel::y_zero());
            for (const Point& p : ry.reduced) CHECK(p.j == 0);
        }
    CHECK_THROWS_AS(reduce_set(counterexample_set(), QuotientRel::x_zero()),
                    std::invalid_argument);
}

TEST_CASE("row relation lemma instances") {
    // degree zero: every involved entry vanishes
    CHECK(lemgp0_check(1, 1, 0, 0, 0));
    CHECK(lemgp0_check(1, 1, 0, 0, 2));
    CHECK(lemgp0_check(2, 1, 1, 1, 5));

    CHECK(lemgp_check(1, 1, 0, 1, 4));
    CHECK(lemgp_check(2, 3, 0, 3, 6));
    CHECK(lemgp_check(1, 2, 1, 2, 5));
    CHECK_THROWS_AS(lemgp_check(2, 3, 0, 2, 6), std::invalid_argument);  // k2 < b
}

TEST_CASE("quotient solutions") {
    // l = r0 with unit multiplicities recovers the squarefree part of b_R
    PointSet R = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    QuotientRel rel = QuotientRel::pos_rel(1, 1);
    UniPoly ba = solve_quotient(R, rel, {1, 1, 1});
    CHECK(ba.degree() == 3);
    UniPoly bred = b_R_reduced(R, rel);
    for (int k = 0; k <= 3; ++k) CHECK(rel.reduce(ba.coeff(k)) == bred.coeff(k));

    // both representative choices of the merged class produce the same
    // normal form (the merged roots are congruent)
    QuotientRel nrel = QuotientRel::neg_rel(2, 3);
    UniPoly expect = b_R_reduced(ejemplito(), nrel);
    for (const PointSet& reps : all_rep_choices(ejemplito(), nrel)) {
        UniPoly alt = solve_on_reps(ejemplito(), nrel, reps, std::vector<int>(reps.size(), 1));
        for (int k = 0; k <= alt.degree(); ++k)
            CHECK(nrel.reduce(alt.coeff(k)) == expect.coeff(k));
    }

    // higher multiplicities still solve the full system
    CHECK_NOTHROW(solve_quotient(R, rel, {2, 1, 3}));
    CHECK_THROWS_AS(solve_quotient(R, rel, {1, 0, 1}), std::invalid_argument);
}

TEST_CASE("system equivalence certificates") {
    // axis: dropped rows vanish entrywise
    CHECK(check_system_equivalence(pts({{0, 0}, {1, 0}, {0, 1}}), QuotientRel::x_zero(), 3));

    // pos: the rectangle relation eliminates (1,1)
    PointSet R = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(check_system_equivalence(R, QuotientRel::pos_rel(1, 1), 4));

    // neg: the staircase relation eliminates the higher representative
    CHECK(check_system_equivalence(ejemplito(), QuotientRel::neg_rel(2, 3), 8));

    // the recorded certificate for the merged class matches the lemma
    ReductionResult rr = reduce_set(ejemplito(), QuotientRel::neg_rel(2, 3));
    REQUIRE(rr.dropped_rows.size() == 1);
    const RowCertificate& cert = rr.dropped_rows[0];
    CHECK(cert.dropped == Point{0, 3});
    std::map<Point, Int> combo(cert.combination.begin(), cert.combination.end());
    CHECK(combo[Point{1, 0}] == 2);
    CHECK(combo[Point{2, 0}] == 2);
    CHECK(combo[Point{0, 1}] == -3);
    CHECK(combo[Point{0, 2}] == -6);
    CHECK(combo[Point{0, 3}] == -6);
}

TEST_CASE("certificates stay independent on longer class chains") {
    // the triangle holds a three-member class {(2,0),(1,1),(0,2)} under x=y
    PointSet tri = pts({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}});
    QuotientRel rel = QuotientRel::neg_rel(1, 1);
    for (RepPolicy policy : {RepPolicy::smallest_height, RepPolicy::largest_height}) {
        ReductionResult rr = reduce_set(tri, rel, policy);
        CHECK(rr.r0 == 3);
        CHECK(rr.dropped_rows.size() == 3);
        CHECK(check_system_equivalence(tri, rel, 6, policy));
    }
    // same for a non-coprime direction cutting the same locus
    for (RepPolicy policy : {RepPolicy::smallest_height, RepPolicy::largest_height})
        CHECK(check_system_equivalence(tri, QuotientRel::neg_rel(2, 2), 6, policy));
}

TEST_CASE("quotient determinants") {
    // axis: prod y^j survives reduction
    PointSet R = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    ReductionResult rx = reduce_set(R, QuotientRel::x_zero());
    MultiPoly dx = det_quotient_closed_form(rx.reduced, QuotientRel::x_zero());
    CHECK(dx == Y());  // {(0,0),(0,1)}: y^0 * y^1

    // pos (1,1): the Vandermonde product reduces to -2 t^3
    PointSet H = pts({{0, 0}, {1, 0}, {0, 1}});
    QuotientRel rel = QuotientRel::pos_rel(1, 1);
    MultiPoly dq = det_quotient_closed_form(H, rel);
    CHECK(dq == MultiPoly::monomial(0, 0, 0, 3, Int(-2)));
    CHECK(dq == rel.reduce(det_bareiss(H)));

    // ejemplito: both representative sets give nonzero determinants
    QuotientRel nrel = QuotientRel::neg_rel(2, 3);
    for (const PointSet& reps : all_rep_choices(ejemplito(), nrel)) {
        MultiPoly d = det_quotient_closed_form(reps, nrel);
        CHECK_FALSE(d.is_zero());
        CHECK(d == nrel.reduce(det_bareiss(reps)));
    }

    // an invalid representative set (congruent pair kept) collapses to zero
    PointSet bad = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(det_quotient_closed_form(bad, rel).is_zero());
}

TEST_CASE("representative counts equal distinct root counts") {
    for (int r = 1; r <= 5; ++r)
        for (const PointSet& R : all_staircases(r))
            for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 3; ++b) {
                    QuotientRel rel = QuotientRel::neg_rel(a, b);
                    std::size_t r0 = reduce_set(R, rel).r0;
                    for (const PointSet& reps : all_rep_choices(R, rel))
                        CHECK(reps.size() == r0);
                }
}
