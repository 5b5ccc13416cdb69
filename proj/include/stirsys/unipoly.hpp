#pragma once

#include <string>
#include <vector>

#include "stirsys/multipoly.hpp"

namespace stirsys {

// Polynomials in s with MultiPoly coefficients, stored from s^0 upward with
// trailing zero coefficients trimmed.  Root-encoded constructions are monic.
class UniPoly {
public:
    UniPoly() = default;

    static UniPoly from_coeffs(std::vector<MultiPoly> coeffs);
    static UniPoly constant(MultiPoly c);

    // prod_i (s - roots[i])^{mults[i]}, expanded exactly; the empty product
    // is the constant 1.
    static UniPoly from_roots(const std::vector<MultiPoly>& roots,
                              const std::vector<int>& mults);

    int degree() const { return int(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;

    const MultiPoly& coeff(int k) const;  // zero outside range
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

    UniPoly scaled(const MultiPoly& m) const;
    UniPoly times_linear(const MultiPoly& root) const;  // multiply by (s - root)

    MultiPoly eval_at(const MultiPoly& value) const;  // substitute s := value

    std::string to_text() const;

private:
    void trim();
    std::vector<MultiPoly> coeffs_;
};

}  // namespace stirsys
