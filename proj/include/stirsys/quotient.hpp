#pragma once

#include <vector>

#include "stirsys/csys.hpp"
#include "stirsys/quotient_rel.hpp"

namespace stirsys {

// Which member represents a congruence class of points (neg case only; the
// other cases have a forced choice).
enum class RepPolicy { smallest_height, largest_height };

// A vanishing integer combination of matrix rows that eliminates one
// dropped point: sum of coeff * row(point) reduces to zero entrywise in the
// quotient, with a nonzero coefficient on the dropped point.  Instances
// come from the two row-relation lemmas (axis rows vanish outright).
struct RowCertificate {
    Point dropped;
    std::vector<std::pair<Point, Int>> combination;
};

struct ReductionResult {
    QuotientRel rel;
    PointSet reduced;                          // subsequence of R
    std::vector<std::vector<Point>> classes;   // congruence classes (neg case)
    std::vector<RowCertificate> dropped_rows;
    std::size_t r0 = 0;  // degree of (b_R)_red = distinct A_ij normal forms
};

ReductionResult reduce_set(const PointSet& R, const QuotientRel& rel,
                           RepPolicy policy = RepPolicy::smallest_height);

// Every choice of one representative per class, each ordered as in R.
// Forced (single) for pos and axis relations.
std::vector<PointSet> all_rep_choices(const PointSet& R, const QuotientRel& rel);

// Row-relation lemma instances, checked as exact normal-form identities.
bool lemgp0_check(int a, int b, int k1, int k2, int ell);  // in C[x,y,z]/(ax+by)
bool lemgp_check(int a, int b, int k1, int k2, int ell);   // in C[x,y,z]/(ax-by), k2 >= b

// Root-encoded solution over the reduced set; verified internally against
// the FULL system M_{R,ell} modulo the relation.
UniPoly solve_quotient(const PointSet& R, const QuotientRel& rel, const std::vector<int>& mults,
                       RepPolicy policy = RepPolicy::smallest_height);
UniPoly solve_on_reps(const PointSet& R, const QuotientRel& rel, const PointSet& reps,
                      const std::vector<int>& mults);

// Squarefree part of b_R in the quotient: one factor per distinct reduced
// root, built directly from normal forms.
UniPoly b_R_reduced(const PointSet& R, const QuotientRel& rel);

// Validates the recorded certificates against M_{R,ell}: every combination
// reduces to zero and the certificate-by-dropped-point matrix is
// nonsingular, so each dropped row lies in the span of the kept rows.
bool check_system_equivalence(const PointSet& R, const QuotientRel& rel, int ell,
                              RepPolicy policy = RepPolicy::smallest_height);

// Closed-form determinant of M_H in the quotient ring (normal form in t,z);
// equals reduce(det_bareiss(H)) and is nonzero for valid representative sets.
MultiPoly det_quotient_closed_form(const PointSet& H, const QuotientRel& rel);

}  // namespace stirsys
