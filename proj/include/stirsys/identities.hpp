#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stirsys/csys.hpp"
#include "stirsys/multipoly.hpp"

namespace stirsys {

// One verified identity instance: named, parametrized, with both sides
// serialized and an exact-equality verdict.
struct IdentityReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::string left;
    std::string right;
    bool verdict = false;
    std::string note;
};

// The grid-sum identity generalizing the classical alternating-sum formula:
// sum over the (k1,k2) grid of signed A_ij^ell / (i! j! (k1-i)! (k2-j)!)
// equals C(k1,k2,ell), checked over the rationals.
IdentityReport gen_palma_check(int k1, int k2, int ell);

// The classical convolution for second-kind numbers, together with the
// row-relation chain C(k1,k2,.) -> C(k1+k2,0,.) that produces it.
IdentityReport convolution_check(int k1, int k2, int ell);  // k2 > 0

// The two b=1 specialization identities (anchored at (k1,1) and (0,k2)).
IdentityReport spec_b1_checks(int a, int k1, int k2, int ell);

// The two-parameter specialization with x = t*z; the t = b case is the
// integer-weight identity.
IdentityReport spec_abt_check(int a, int b, const Rat& t, int ell);

// Weighted second-kind numbers as a polynomial in z; cross-checked
// internally against the exponential generating function route.
MultiPoly weighted_stirling(int n, int w);

// Verifies the grid-derived weighted identity (asserted) and evaluates the
// published single-sum form as printed (reported, not asserted).
IdentityReport weighted_discrepancy_report(int n, int w);

// Generalized second-kind numbers: agreement with C(k,0,n), the alternating
// closed form, and the a-fold sum telescoping to (ax+z)^n - z^n.
IdentityReport gen_stirling_checks(int n, int k, int a);

}  // namespace stirsys
