#include "stirsys/identities.hpp"

#include <stdexcept>

#include "stirsys/quotient.hpp"
#include "stirsys/stirling.hpp"
#include "stirsys/truncseries.hpp"

namespace stirsys {

namespace {

std::string int_str(const Int& v) { return v.str(); }

}  // namespace

IdentityReport gen_palma_check(int k1, int k2, int ell) {
    if (k1 < 0 || k2 < 0 || ell < 0) throw std::invalid_argument("gen_palma_check: negative argument");
    RatPoly lhs;
    for (int i = 0; i <= k1; ++i) {
        for (int j = 0; j <= k2; ++j) {
            Rat w(Int(1), factorial(i) * factorial(j) * factorial(k1 - i) * factorial(k2 - j));
            if ((k1 + k2 - i - j) % 2) w = -w;
            lhs += to_rational(linear_form({i, j}).pow(ell)).scaled(w);
        }
    }
    RatPoly rhs = to_rational(cpoly(k1, k2, ell));
    IdentityReport rep;
    rep.id = "gen_palma";
    rep.params = {{"k1", std::to_string(k1)}, {"k2", std::to_string(k2)}, {"l", std::to_string(ell)}};
    rep.left = lhs.to_text();
    rep.right = rhs.to_text();
    rep.verdict = (lhs == rhs);
    return rep;
}

IdentityReport convolution_check(int k1, int k2, int ell) {
    if (k2 < 1) throw std::invalid_argument("convolution_check needs k2 > 0");
    if (k1 < 0 || ell < 0) throw std::invalid_argument("convolution_check: negative argument");

    Int lhs = binomial(k1 + k2, k1) * stirling2(ell, k1 + k2);
    Int rhs = 0;
    for (int i1 = k1; i1 <= ell - k2; ++i1)
        rhs += binomial(ell, i1) * stirling2(ell - i1, k2) * stirling2(i1, k1);
    bool sums_equal = (lhs == rhs);

    // The chain C(k1,k2,.) = ((k1+1)/k2) C(k1+1,k2-1,.) = ... modulo x-y,
    // one row-relation step at a time.
    bool chain = true;
    for (int m = 0; m < k2; ++m)
        chain = chain && lemgp_check(1, 1, k1 + m, k2 - m, ell);
    QuotientRel rel = QuotientRel::neg_rel(1, 1);
    MultiPoly end1 = rel.reduce(cpoly(k1, k2, ell)).substituted(Var::z, Int(0));
    MultiPoly end2 = rel.reduce(cpoly(k1 + k2, 0, ell)).substituted(Var::z, Int(0));
    chain = chain && (end1.scaled(factorial(k1) * factorial(k2)) ==
                      end2.scaled(factorial(k1 + k2)));

    IdentityReport rep;
    rep.id = "convolution";
    rep.params = {{"k1", std::to_string(k1)}, {"k2", std::to_string(k2)}, {"l", std::to_string(ell)}};
    rep.left = int_str(lhs);
    rep.right = int_str(rhs);
    rep.verdict = sums_equal && chain;
    rep.note = chain ? "row-relation chain verified" : "row-relation chain FAILED";
    return rep;
}

IdentityReport spec_b1_checks(int a, int k1, int k2, int ell) {
    if (a < 1 || k1 < 0 || k2 < 1 || ell < 1)
        throw std::invalid_argument("spec_b1_checks needs a >= 1, k1 >= 0, k2 >= 1, l >= 1");

    // anchored at (k1, 1):
    Int l1 = 0;
    for (int j = 1; j <= a; ++j) l1 += falling_factorial(a, j) * binomial(k1 + j, k1) * stirling2(ell, k1 + j);
    Int r1 = 0;
    for (int i = k1; i <= ell - 1; ++i)
        r1 += binomial(ell, i) * stirling2(i, k1) * int_pow(Int(a), ell - i);
    bool first = (l1 == r1);

    // anchored at (0, k2), with 1/a^i weights:
    Rat l2 = Rat(k2) * Rat(stirling2(ell, k2));
    Rat r2 = 0;
    for (int j = 1; j <= a; ++j) {
        Rat inner = 0;
        for (int i = j; i <= ell - k2 + 1; ++i)
            inner += Rat(binomial(ell, i) * stirling2(i, j) * stirling2(ell - i, k2 - 1),
                         int_pow(Int(a), i));
        r2 += Rat(falling_factorial(a, j)) * inner;
    }
    bool second = (l2 == r2);

    IdentityReport rep;
    rep.id = "spec_b1";
    rep.params = {{"a", std::to_string(a)},
                  {"k1", std::to_string(k1)},
                  {"k2", std::to_string(k2)},
                  {"l", std::to_string(ell)}};
    rep.left = int_str(l1) + " ; " + coeff_to_string(l2);
    rep.right = int_str(r1) + " ; " + coeff_to_string(r2);
    rep.verdict = first && second;
    rep.note = std::string("first=") + (first ? "true" : "false") + " second=" +
               (second ? "true" : "false");
    return rep;
}

IdentityReport spec_abt_check(int a, int b, const Rat& t, int ell) {
    if (a < 1 || b < 1 || ell < 0) throw std::invalid_argument("spec_abt_check needs a, b >= 1");
    if (t == 0) throw std::invalid_argument("spec_abt_check needs t != 0");
    auto side = [&](int m, const Rat& base) {
        Rat total = 0;
        for (int j = 1; j <= m; ++j) {
            Rat inner = 0;
            for (int i = j; i <= ell; ++i)
                inner += Rat(binomial(ell, i) * stirling2(i, j)) * rat_pow(base, i);
            total += Rat(falling_factorial(m, j)) * inner;
        }
        return total;
    };
    Rat lhs = side(a, t);
    Rat rhs = side(b, Rat(a) * t / b);
    IdentityReport rep;
    rep.id = "spec_abt";
    rep.params = {{"a", std::to_string(a)},
                  {"b", std::to_string(b)},
                  {"t", coeff_to_string(t)},
                  {"l", std::to_string(ell)}};
    rep.left = coeff_to_string(lhs);
    rep.right = coeff_to_string(rhs);
    rep.verdict = (lhs == rhs);
    return rep;
}

MultiPoly weighted_stirling(int n, int w) {
    if (n < 0 || w < 0) throw std::invalid_argument("weighted_stirling: negative argument");
    MultiPoly direct = cpoly(w, 0, n).substituted(Var::x, Int(1));
    // EGF route: coefficient of t^n/n! in (e^t - 1)^w e^{zt} / w!
    TruncSeries em1 = TruncSeries::exp_t(MultiPoly::constant(1), n) - TruncSeries::one(n);
    TruncSeries s = em1.pow(w) * TruncSeries::exp_t(MultiPoly::variable(Var::z), n);
    MultiPoly via_egf = div_scalar_exact(s.coeff(n), factorial(w));
    if (direct != via_egf)
        throw std::logic_error("weighted_stirling: generating-function route disagrees");
    return direct;
}

IdentityReport weighted_discrepancy_report(int n, int w) {
    MultiPoly sn = weighted_stirling(n, w);
    const MultiPoly z = MultiPoly::variable(Var::z);

    // grid-derived form: w! S(n,w,z) = sum_{i<=w} binom(w,i) (-1)^{w-i} (i+z)^n
    MultiPoly derived_rhs;
    for (int i = 0; i <= w; ++i) {
        Int c = binomial(w, i);
        if ((w - i) % 2) c = -c;
        derived_rhs += (z + MultiPoly::constant(i)).pow(n).scaled(c);
    }
    bool derived = (sn.scaled(factorial(w)) == derived_rhs);

    // published form, evaluated exactly as printed:
    // n! S(n,w,z) = sum_{i<=n} binom(n,i) (-1)^{n-1} (z+i)^n
    MultiPoly printed_rhs;
    for (int i = 0; i <= n; ++i) {
        Int c = binomial(n, i);
        if ((n - 1) % 2 != 0) c = -c;
        printed_rhs += (z + MultiPoly::constant(i)).pow(n).scaled(c);
    }
    bool printed = (sn.scaled(factorial(n)) == printed_rhs);

    IdentityReport rep;
    rep.id = "weighted_stirling_forms";
    rep.params = {{"n", std::to_string(n)}, {"w", std::to_string(w)}};
    rep.left = sn.scaled(factorial(w)).to_text();
    rep.right = derived_rhs.to_text();
    rep.verdict = derived;
    rep.note = std::string("derived=") + (derived ? "true" : "false") +
               " printed=" + (printed ? "true" : "false");
    return rep;
}

IdentityReport gen_stirling_checks(int n, int k, int a) {
    if (n < 0 || k < 0 || a < 1)
        throw std::invalid_argument("gen_stirling_checks needs n, k >= 0 and a >= 1");
    const MultiPoly x = MultiPoly::variable(Var::x);
    const MultiPoly z = MultiPoly::variable(Var::z);

    auto s_gen = [&](int nn, int kk) {  // sum_i binom(nn,i) z^{nn-i} x^i S(i,kk)
        MultiPoly acc;
        for (int i = 0; i <= nn; ++i) {
            Int c = binomial(nn, i) * stirling2(i, kk);
            if (c == 0) continue;
            acc += MultiPoly::monomial(i, 0, nn - i, 0, c);
        }
        return acc;
    };

    bool agrees = (s_gen(n, k) == cpoly(k, 0, n));

    MultiPoly closed;
    for (int i = 0; i <= k; ++i) {
        Int c = binomial(k, i);
        if ((k - i) % 2) c = -c;
        closed += (x.scaled(i) + z).pow(n).scaled(c);
    }
    bool closed_ok = (s_gen(n, k).scaled(factorial(k)) == closed);

    MultiPoly asum;
    for (int j = 1; j <= a; ++j) asum += s_gen(n, j).scaled(falling_factorial(a, j));
    bool asum_ok = (asum == (x.scaled(a) + z).pow(n) - z.pow(n));

    IdentityReport rep;
    rep.id = "gen_stirling";
    rep.params = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"a", std::to_string(a)}};
    rep.left = s_gen(n, k).to_text();
    rep.right = cpoly(k, 0, n).to_text();
    rep.verdict = agrees && closed_ok && asum_ok;
    rep.note = std::string("agrees=") + (agrees ? "true" : "false") +
               " closed_form=" + (closed_ok ? "true" : "false") +
               " a_sum=" + (asum_ok ? "true" : "false");
    return rep;
}

}  // namespace stirsys
