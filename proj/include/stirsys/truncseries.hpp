#pragma once

#include <vector>

#include "stirsys/multipoly.hpp"

namespace stirsys {

// Truncated power series in an auxiliary variable with EGF coefficients:
// the stored coefficient u_m multiplies t^m/m!, so products convolve with
// binomial weights.  All arithmetic is exact modulo t^{order+1} and
// requires matching truncation orders.
class TruncSeries {
public:
    explicit TruncSeries(int order);

    static TruncSeries one(int order);
    static TruncSeries exp_t(const MultiPoly& c, int order);  // e^{c t}

    int order() const { return order_; }
    const MultiPoly& coeff(int m) const;
    void set_coeff(int m, MultiPoly v);

    bool operator==(const TruncSeries& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    TruncSeries pow(int e) const;
    TruncSeries div_exact(const Int& d) const;

private:
    static void check_orders(const TruncSeries& a, const TruncSeries& b);
    int order_;
    std::vector<MultiPoly> coeffs_;
};

}  // namespace stirsys
