#include "stirsys/unipoly.hpp"

#include <stdexcept>

namespace stirsys {

namespace {
const MultiPoly kZero{};
}

UniPoly UniPoly::from_coeffs(std::vector<MultiPoly> coeffs) {
    UniPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

UniPoly UniPoly::constant(MultiPoly c) {
    UniPoly p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

UniPoly UniPoly::from_roots(const std::vector<MultiPoly>& roots,
                            const std::vector<int>& mults) {
    if (roots.size() != mults.size())
        throw std::invalid_argument("roots and multiplicities differ in length");
    UniPoly p = constant(MultiPoly::constant(1));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (mults[i] <= 0) throw std::invalid_argument("multiplicity must be positive");
        for (int m = 0; m < mults[i]; ++m) p = p.times_linear(roots[i]);
    }
    return p;
}

bool UniPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == MultiPoly::constant(1);
}

const MultiPoly& UniPoly::coeff(int k) const {
    if (k < 0 || k >= int(coeffs_.size())) return kZero;
    return coeffs_[k];
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<MultiPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<MultiPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly UniPoly::scaled(const MultiPoly& m) const {
    std::vector<MultiPoly> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * m;
    return from_coeffs(std::move(c));
}

UniPoly UniPoly::times_linear(const MultiPoly& root) const {
    if (is_zero()) return UniPoly();
    std::vector<MultiPoly> c(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        c[i + 1] += coeffs_[i];
        c[i] -= coeffs_[i] * root;
    }
    return from_coeffs(std::move(c));
}

MultiPoly UniPoly::eval_at(const MultiPoly& value) const {
    MultiPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * value + *it;
    return r;
}

std::string UniPoly::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const MultiPoly& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = c.to_text();
        if (k == 0) {
            out += cs;
        } else if (c == MultiPoly::constant(1)) {
            out += "s^" + std::to_string(k);
        } else {
            bool wrap = c.term_count() > 1;
            out += (wrap ? "(" + cs + ")" : cs) + " * s^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace stirsys
