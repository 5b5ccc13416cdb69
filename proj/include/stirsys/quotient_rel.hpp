#pragma once

#include <string>

#include "stirsys/multipoly.hpp"

namespace stirsys {

// A linear relation cutting out a quotient of the ambient ring, split into
// the four sign cases:
//   pos:    a x + b y = 0  with a, b > 0
//   neg:    a x - b y = 0  with a, b > 0   (i.e. ax+by=0 with b < 0)
//   x_zero: x = 0
//   y_zero: y = 0
//
// The normal form parametrizes the line with one new variable t
// (pos: x -> -b t, y -> a t;  neg: x -> b t, y -> a t), which keeps integer
// coefficients and makes congruence equivalent to equality of normal forms.
// (a, b) are kept as given: they are not reduced to lowest terms.
struct QuotientRel {
    enum class Case { pos, neg, x_zero, y_zero };

    Case kase = Case::x_zero;
    long long a = 0;
    long long b = 0;

    static QuotientRel pos_rel(long long a, long long b);
    static QuotientRel neg_rel(long long a, long long b);
    static QuotientRel x_zero();
    static QuotientRel y_zero();

    // Accepts "ax+by", "ax-by", "x", "y"; missing coefficients default to 1.
    static QuotientRel parse(const std::string& text);

    MultiPoly reduce(const MultiPoly& p) const;
    bool congruent(const MultiPoly& p, const MultiPoly& q) const {
        return reduce(p - q).is_zero();
    }

    // Primitive direction (a,b)/gcd(a,b); the relation generates the same
    // ideal over the rationals as its primitive form.
    std::pair<long long, long long> primitive() const;

    std::string text() const;
    std::string case_name() const;
};

}  // namespace stirsys
