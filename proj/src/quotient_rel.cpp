#include "stirsys/quotient_rel.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace stirsys {

QuotientRel QuotientRel::pos_rel(long long a, long long b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("pos relation needs a, b > 0");
    return {Case::pos, a, b};
}

QuotientRel QuotientRel::neg_rel(long long a, long long b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("neg relation needs a, b > 0");
    return {Case::neg, a, b};
}

QuotientRel QuotientRel::x_zero() { return {Case::x_zero, 0, 0}; }
QuotientRel QuotientRel::y_zero() { return {Case::y_zero, 0, 0}; }

QuotientRel QuotientRel::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s == "x") return x_zero();
    if (s == "y") return y_zero();

    std::size_t pos = 0;
    auto read_coeff = [&]() -> long long {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) return 1;
        return std::stoll(s.substr(start, pos - start));
    };
    long long a = read_coeff();
    if (pos >= s.size() || s[pos] != 'x')
        throw std::invalid_argument("cannot parse relation: " + text);
    ++pos;
    if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-'))
        throw std::invalid_argument("cannot parse relation: " + text);
    bool negative = s[pos] == '-';
    ++pos;
    long long b = read_coeff();
    if (pos >= s.size() || s[pos] != 'y' || pos + 1 != s.size())
        throw std::invalid_argument("cannot parse relation: " + text);
    if (a <= 0 || b <= 0)
        throw std::invalid_argument("relation coefficients must be positive: " + text);
    return negative ? neg_rel(a, b) : pos_rel(a, b);
}

MultiPoly QuotientRel::reduce(const MultiPoly& p) const {
    std::map<std::uint64_t, Int> acc;
    for (const auto& [k, c] : p.terms()) {
        int ex = monom::exponent(k, Var::x);
        int ey = monom::exponent(k, Var::y);
        int ez = monom::exponent(k, Var::z);
        int et = monom::exponent(k, Var::t);
        Int c2 = c;
        std::uint64_t k2 = k;
        switch (kase) {
            case Case::x_zero:
                if (ex > 0) continue;
                break;
            case Case::y_zero:
                if (ey > 0) continue;
                break;
            case Case::pos:
                c2 *= int_pow(Int(-b), ex) * int_pow(Int(a), ey);
                k2 = monom::make(0, 0, ez, et + ex + ey);
                break;
            case Case::neg:
                c2 *= int_pow(Int(b), ex) * int_pow(Int(a), ey);
                k2 = monom::make(0, 0, ez, et + ex + ey);
                break;
        }
        if (c2 == 0) continue;
        auto [it, fresh] = acc.try_emplace(k2, Int(0));
        it->second += c2;
        (void)fresh;
    }
    std::vector<MultiPoly::Term> terms;
    for (auto& [k, c] : acc)
        if (c != 0) terms.emplace_back(k, std::move(c));
    return MultiPoly::from_sorted_terms(std::move(terms));
}

std::pair<long long, long long> QuotientRel::primitive() const {
    if (kase == Case::x_zero || kase == Case::y_zero)
        throw std::logic_error("axis relations have no direction");
    long long g = std::gcd(a, b);
    return {a / g, b / g};
}

std::string QuotientRel::text() const {
    switch (kase) {
        case Case::x_zero: return "x";
        case Case::y_zero: return "y";
        case Case::pos: return std::to_string(a) + "x+" + std::to_string(b) + "y";
        case Case::neg: return std::to_string(a) + "x-" + std::to_string(b) + "y";
    }
    return {};
}

std::string QuotientRel::case_name() const {
    switch (kase) {
        case Case::x_zero: return "x_zero";
        case Case::y_zero: return "y_zero";
        case Case::pos: return "pos";
        case Case::neg: return "neg";
    }
    return {};
}

}  // namespace stirsys
