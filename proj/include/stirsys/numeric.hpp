#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stirsys {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Generalized binomial: falling factorial over k!, so the upper index may
// be negative (binomial(n, 0) = 1 for every n); zero for k < 0.
inline Int binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        if (k > n - k) k = n - k;
        Int r = 1;
        for (long long i = 1; i <= k; ++i) {
            r *= (n - k + i);
            r /= i;  // exact at every step
        }
        return r;
    }
    Int num = 1;
    for (long long i = 0; i < k; ++i) num *= (n - i);
    Int den = 1;
    for (long long i = 2; i <= k; ++i) den *= i;
    Int q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0) throw std::logic_error("binomial: inexact division");
    return q;
}

// n (n-1) ... (n-k+1)
inline Int falling_factorial(int n, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline Int int_pow(const Int& base, long long e) {
    if (e < 0) throw std::invalid_argument("negative integer exponent");
    if (e == 0) return 1;  // 0^0 = 1 by convention
    Int r = 1, b = base;
    for (long long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("0 raised to negative power");
        return Rat(1) / rat_pow(base, -e);
    }
    Rat r = 1, b = base;
    for (long long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

// Exact integer quotient; throws if the division leaves a remainder.
inline Int exact_quotient(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("inexact integer division");
    return q;
}

// Deterministic 64-bit generator (splitmix64); independent of the standard
// library so seeded runs produce identical bytes on every platform.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("below(0)");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

private:
    std::uint64_t state_;
};

}  // namespace stirsys
