#include "stirsys/truncseries.hpp"

#include <stdexcept>

namespace stirsys {

TruncSeries::TruncSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::one(int order) {
    TruncSeries s(order);
    s.coeffs_[0] = MultiPoly::constant(1);
    return s;
}

TruncSeries TruncSeries::exp_t(const MultiPoly& c, int order) {
    TruncSeries s(order);
    MultiPoly p = MultiPoly::constant(1);
    for (int m = 0; m <= order; ++m) {
        s.coeffs_[m] = p;
        if (m < order) p = p * c;
    }
    return s;
}

const MultiPoly& TruncSeries::coeff(int m) const {
    if (m < 0 || m > order_) throw std::out_of_range("series coefficient index");
    return coeffs_[m];
}

void TruncSeries::set_coeff(int m, MultiPoly v) {
    if (m < 0 || m > order_) throw std::out_of_range("series coefficient index");
    coeffs_[m] = std::move(v);
}

void TruncSeries::check_orders(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_)
        throw std::invalid_argument("mismatched truncation orders");
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b);
    TruncSeries r(a.order_);
    for (int m = 0; m <= a.order_; ++m) r.coeffs_[m] = a.coeffs_[m] + b.coeffs_[m];
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b);
    TruncSeries r(a.order_);
    for (int m = 0; m <= a.order_; ++m) r.coeffs_[m] = a.coeffs_[m] - b.coeffs_[m];
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b);
    TruncSeries r(a.order_);
    for (int m = 0; m <= a.order_; ++m) {
        MultiPoly acc;
        for (int i = 0; i <= m; ++i) {
            if (a.coeffs_[i].is_zero() || b.coeffs_[m - i].is_zero()) continue;
            acc += (a.coeffs_[i] * b.coeffs_[m - i]).scaled(binomial(m, i));
        }
        r.coeffs_[m] = std::move(acc);
    }
    return r;
}

TruncSeries TruncSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("series power with negative exponent");
    TruncSeries r = one(order_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

TruncSeries TruncSeries::div_exact(const Int& d) const {
    TruncSeries r(order_);
    for (int m = 0; m <= order_; ++m) r.coeffs_[m] = div_scalar_exact(coeffs_[m], d);
    return r;
}

}  // namespace stirsys
