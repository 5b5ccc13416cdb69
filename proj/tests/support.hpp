#pragma once

#include <optional>
#include <vector>

#include "stirsys/csys.hpp"
#include "stirsys/multipoly.hpp"

namespace test_support {

using namespace stirsys;

inline MultiPoly P(const std::string& s) { return MultiPoly::parse(s); }

inline MultiPoly X() { return MultiPoly::variable(Var::x); }
inline MultiPoly Y() { return MultiPoly::variable(Var::y); }
inline MultiPoly Z() { return MultiPoly::variable(Var::z); }
inline MultiPoly T() { return MultiPoly::variable(Var::t); }

inline PointSet pts(std::vector<Point> v) { return PointSet(std::move(v)); }

// Small random polynomial in x, y, z with coefficients in [-9, 9].
inline MultiPoly random_poly(DetRng& rng, int max_terms = 5, int max_exp = 3) {
    MultiPoly p;
    int terms = 1 + int(rng.below(max_terms));
    for (int t = 0; t < terms; ++t) {
        int ex = int(rng.below(max_exp + 1));
        int ey = int(rng.below(max_exp + 1));
        int ez = int(rng.below(max_exp + 1));
        long long c = (long long)rng.below(19) - 9;
        p += MultiPoly::monomial(ex, ey, ez, 0, Int(c));
    }
    return p;
}

inline Rat random_rat(DetRng& rng) {
    long long num = (long long)rng.below(17) - 8;
    long long den = 1 + (long long)rng.below(4);
    return Rat(num, den);
}

// Independent oracle: plain Gauss-Jordan elimination over the rationals.
// Returns nothing when the matrix is singular.
inline std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> a,
                                                      std::vector<Rat> rhs) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        Rat inv = Rat(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace test_support
