#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirsys/numeric.hpp"

namespace stirsys {

// Sparse polynomials in the variables x, y, z and the auxiliary line
// parameter t (t only appears in normal forms produced by quotient
// reduction).  Terms are kept in a sorted vector keyed by packed
// exponents; ascending key order equals ascending lexicographic order on
// (e_x, e_y, e_z, e_t).  Invariants: keys strictly increasing, no zero
// coefficients.  Two values are equal iff their term vectors are equal.

enum class Var : int { x = 0, y = 1, z = 2, t = 3 };

namespace monom {

constexpr int kShift[4] = {48, 32, 16, 0};

inline std::uint64_t make(int ex, int ey, int ez, int et = 0) {
    return (std::uint64_t(ex) << 48) | (std::uint64_t(ey) << 32) |
           (std::uint64_t(ez) << 16) | std::uint64_t(et);
}

inline int exponent(std::uint64_t key, Var v) {
    return int((key >> kShift[int(v)]) & 0xffff);
}

inline bool divides(std::uint64_t d, std::uint64_t p) {
    for (int v = 0; v < 4; ++v)
        if (((d >> kShift[v]) & 0xffff) > ((p >> kShift[v]) & 0xffff)) return false;
    return true;
}

}  // namespace monom

template <typename C>
class BasicPoly {
public:
    using Coeff = C;
    using Term = std::pair<std::uint64_t, C>;

    BasicPoly() = default;

    static BasicPoly zero() { return BasicPoly(); }

    static BasicPoly constant(C v) {
        BasicPoly p;
        if (v != 0) p.terms_.emplace_back(0, std::move(v));
        return p;
    }

    static BasicPoly variable(Var v) {
        int e[4] = {0, 0, 0, 0};
        e[int(v)] = 1;
        return monomial(e[0], e[1], e[2], e[3], C(1));
    }

    static BasicPoly monomial(int ex, int ey, int ez, int et, C coeff) {
        BasicPoly p;
        if (coeff != 0) p.terms_.emplace_back(monom::make(ex, ey, ez, et), std::move(coeff));
        return p;
    }

    // Trusted constructor: `terms` must already be sorted, unique, nonzero.
    static BasicPoly from_sorted_terms(std::vector<Term> terms) {
        BasicPoly p;
        p.terms_ = std::move(terms);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
    }

    C constant_value() const {
        if (terms_.empty()) return C(0);
        if (!is_constant()) throw std::logic_error("polynomial is not constant");
        return terms_[0].second;
    }

    int degree(Var v) const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, monom::exponent(k, v));
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) {
            int s = 0;
            for (int v = 0; v < 4; ++v) s += monom::exponent(k, Var(v));
            d = std::max(d, s);
        }
        return d;
    }

    bool operator==(const BasicPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BasicPoly& o) const { return !(*this == o); }

    BasicPoly operator-() const {
        BasicPoly r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    BasicPoly& operator+=(const BasicPoly& o) { return *this = merge(*this, o, false); }
    BasicPoly& operator-=(const BasicPoly& o) { return *this = merge(*this, o, true); }

    friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) { return merge(a, b, false); }
    friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) { return merge(a, b, true); }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero() || b.is_zero()) return BasicPoly();
        std::map<std::uint64_t, C> acc;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                auto [it, fresh] = acc.try_emplace(ka + kb, C(0));
                it->second += ca * cb;
                (void)fresh;
            }
        }
        BasicPoly r;
        r.terms_.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (c != 0) r.terms_.emplace_back(k, std::move(c));
        return r;
    }

    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

    BasicPoly scaled(const C& s) const {
        if (s == 0) return BasicPoly();
        BasicPoly r = *this;
        for (auto& [k, c] : r.terms_) c *= s;
        return r;
    }

    BasicPoly pow(long long e) const {
        if (e < 0) throw std::invalid_argument("polynomial power with negative exponent");
        BasicPoly r = constant(C(1));
        BasicPoly b = *this;
        for (long long k = e; k > 0; k >>= 1) {
            if (k & 1) r *= b;
            if (k > 1) b *= b;
        }
        return r;
    }

    // Substitute a constant for one variable.
    BasicPoly substituted(Var v, const C& value) const {
        std::map<std::uint64_t, C> acc;
        for (const auto& [k, c] : terms_) {
            int e = monom::exponent(k, v);
            std::uint64_t k2 = k - (std::uint64_t(e) << monom::kShift[int(v)]);
            C c2 = c * coeff_pow(value, e);
            if (c2 == 0) continue;
            auto [it, fresh] = acc.try_emplace(k2, C(0));
            it->second += c2;
            (void)fresh;
        }
        BasicPoly r;
        for (auto& [k, c] : acc)
            if (c != 0) r.terms_.emplace_back(k, std::move(c));
        return r;
    }

    bool depends_on(Var v) const {
        for (const auto& [k, c] : terms_)
            if (monom::exponent(k, v) > 0) return true;
        return false;
    }

    // Exact evaluation; the t slot defaults to 0 and polynomials that
    // actually contain t must be evaluated with the four-argument form.
    Rat eval(const Rat& xv, const Rat& yv, const Rat& zv) const {
        if (depends_on(Var::t)) throw std::invalid_argument("polynomial contains t; pass a t value");
        return eval(xv, yv, zv, Rat(0));
    }

    Rat eval(const Rat& xv, const Rat& yv, const Rat& zv, const Rat& tv) const {
        Rat total = 0;
        for (const auto& [k, c] : terms_) {
            Rat term = Rat(c);
            term *= rat_pow(xv, monom::exponent(k, Var::x));
            term *= rat_pow(yv, monom::exponent(k, Var::y));
            term *= rat_pow(zv, monom::exponent(k, Var::z));
            term *= rat_pow(tv, monom::exponent(k, Var::t));
            total += term;
        }
        return total;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return terms_.back();
    }

    std::string to_text() const;
    static BasicPoly parse(const std::string& s);

private:
    static C coeff_pow(const C& base, int e) {
        C r(1), b = base;
        for (int k = e; k > 0; k >>= 1) {
            if (k & 1) r *= b;
            if (k > 1) b *= b;
        }
        return r;
    }

    static BasicPoly merge(const BasicPoly& a, const BasicPoly& b, bool subtract) {
        BasicPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                const auto& [k, c] = b.terms_[j++];
                r.terms_.emplace_back(k, subtract ? -c : c);
            } else {
                C c = subtract ? C(a.terms_[i].second - b.terms_[j].second)
                               : C(a.terms_[i].second + b.terms_[j].second);
                if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i, ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

using MultiPoly = BasicPoly<Int>;
using RatPoly = BasicPoly<Rat>;

// ---- coefficient helpers -------------------------------------------------

inline std::string coeff_to_string(const Int& v) { return v.str(); }
inline std::string coeff_to_string(const Rat& v) {
    if (boost::multiprecision::denominator(v) == 1)
        return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

inline void coeff_from_string(const std::string& s, Int& out) {
    if (s.find('/') != std::string::npos)
        throw std::invalid_argument("rational coefficient in integer polynomial: " + s);
    out = Int(s);
}
inline void coeff_from_string(const std::string& s, Rat& out) {
    auto slash = s.find('/');
    if (slash == std::string::npos) { out = Rat(Int(s)); return; }
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    out = Rat(num, den);
}

// Exact division of coefficients: checked for integers, plain for rationals.
inline Int coeff_exact_div(const Int& a, const Int& b) { return exact_quotient(a, b); }
inline Rat coeff_exact_div(const Rat& a, const Rat& b) {
    if (b == 0) throw std::domain_error("division by zero");
    return a / b;
}

// ---- free operations -----------------------------------------------------

// Exact polynomial division (the quotient must exist in the same ring);
// used by fraction-free elimination where every division is exact.
template <typename C>
BasicPoly<C> exact_div(BasicPoly<C> p, const BasicPoly<C>& d) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<typename BasicPoly<C>::Term> q;
    const auto& [kd, cd] = d.leading_term();
    while (!p.is_zero()) {
        const auto& [kp, cp] = p.leading_term();
        if (!monom::divides(kd, kp)) throw std::logic_error("inexact polynomial division");
        C qc = coeff_exact_div(cp, cd);
        std::uint64_t qk = kp - kd;
        // subtract (qc * t^qk) * d
        std::vector<typename BasicPoly<C>::Term> sub;
        sub.reserve(d.term_count());
        for (const auto& [k, c] : d.terms()) sub.emplace_back(k + qk, c * qc);
        p -= BasicPoly<C>::from_sorted_terms(std::move(sub));
        q.emplace_back(qk, std::move(qc));
    }
    std::reverse(q.begin(), q.end());  // collected with strictly decreasing keys
    return BasicPoly<C>::from_sorted_terms(std::move(q));
}

// Divide every coefficient by an integer scalar, asserting exactness.
inline MultiPoly div_scalar_exact(const MultiPoly& p, const Int& s) {
    if (s == 0) throw std::domain_error("division by zero");
    std::vector<MultiPoly::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [k, c] : p.terms()) terms.emplace_back(k, exact_quotient(c, s));
    return MultiPoly::from_sorted_terms(std::move(terms));
}

inline RatPoly to_rational(const MultiPoly& p) {
    std::vector<RatPoly::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [k, c] : p.terms()) terms.emplace_back(k, Rat(c));
    return RatPoly::from_sorted_terms(std::move(terms));
}

// Converts back to integer coefficients; throws if any denominator remains.
inline MultiPoly to_integer_exact(const RatPoly& p) {
    std::vector<MultiPoly::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [k, c] : p.terms()) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("polynomial has non-integer coefficient: " + coeff_to_string(c));
        terms.emplace_back(k, boost::multiprecision::numerator(c));
    }
    return MultiPoly::from_sorted_terms(std::move(terms));
}

// ---- canonical text form -------------------------------------------------
//
// Terms in descending exponent-lex order, joined by " + " / " - ".
// A term prints as `c * x^i y^j z^k t^m` with zero exponents omitted and a
// unit coefficient omitted unless the term is constant, e.g.
// "x^2 + 2 * x^1 z^1" or "-3".

namespace detail {

template <typename C>
std::string term_to_text(std::uint64_t key, const C& coeff, bool leading) {
    std::ostringstream os;
    bool negative = coeff < 0;
    if (leading) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    C a = negative ? C(-coeff) : coeff;
    static const char* names[4] = {"x", "y", "z", "t"};
    std::string vars;
    for (int v = 0; v < 4; ++v) {
        int e = monom::exponent(key, Var(v));
        if (e > 0) {
            if (!vars.empty()) vars += " ";
            vars += names[v];
            vars += "^" + std::to_string(e);
        }
    }
    if (vars.empty()) {
        os << coeff_to_string(a);
    } else if (a == 1) {
        os << vars;
    } else {
        os << coeff_to_string(a) << " * " << vars;
    }
    return os.str();
}

}  // namespace detail

template <typename C>
std::string BasicPoly<C>::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out += detail::term_to_text(it->first, it->second, it == terms_.rbegin());
    return out;
}

template <typename C>
BasicPoly<C> BasicPoly<C>::parse(const std::string& s) {
    std::map<std::uint64_t, C> acc;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; };
    skip_ws();
    if (pos == s.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        skip_ws();
        if (!first) {
            if (s[pos] == '+') { ++pos; }
            else if (s[pos] == '-') { sign = -1; ++pos; }
            else throw std::invalid_argument("expected '+' or '-' at: " + s.substr(pos));
            skip_ws();
        } else if (s[pos] == '-') {
            sign = -1; ++pos; skip_ws();
        }
        first = false;

        C coeff(1);
        bool saw_coeff = false;
        if (pos < s.size() && (std::isdigit((unsigned char)s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '/')) ++pos;
            coeff_from_string(s.substr(start, pos - start), coeff);
            saw_coeff = true;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') { ++pos; skip_ws(); }
        }
        int ex[4] = {0, 0, 0, 0};
        bool saw_var = false;
        while (pos < s.size() && (s[pos] == 'x' || s[pos] == 'y' || s[pos] == 'z' || s[pos] == 't')) {
            int v = s[pos] == 'x' ? 0 : s[pos] == 'y' ? 1 : s[pos] == 'z' ? 2 : 3;
            ++pos;
            int e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
                if (start == pos) throw std::invalid_argument("missing exponent");
                e = std::stoi(s.substr(start, pos - start));
            }
            ex[v] += e;
            saw_var = true;
            skip_ws();
        }
        if (!saw_coeff && !saw_var)
            throw std::invalid_argument("malformed term at: " + s.substr(pos));
        C v = coeff;
        if (sign < 0) v = -v;
        if (v != 0) {
            auto [it, fresh] = acc.try_emplace(monom::make(ex[0], ex[1], ex[2], ex[3]), C(0));
            it->second += v;
            (void)fresh;
        }
        skip_ws();
    }
    BasicPoly p;
    for (auto& [k, c] : acc)
        if (c != 0) p.terms_.emplace_back(k, std::move(c));
    return p;
}

template <typename C>
std::ostream& operator<<(std::ostream& os, const BasicPoly<C>& p) {
    return os << p.to_text();
}

}  // namespace stirsys
