#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stirsys/multipoly.hpp"
#include "stirsys/unipoly.hpp"

namespace stirsys {

struct Point {
    int i = 0;
    int j = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

std::string point_text(Point p);

// A finite ordered set of lattice points; the order is the matrix row order
// and is preserved exactly as supplied.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts);

    static PointSet parse(const std::string& text);  // "0,0;1,0;0,1"

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Point& operator[](std::size_t k) const { return pts_[k]; }
    const std::vector<Point>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    bool contains(Point p) const;
    std::optional<std::size_t> index_of(Point p) const;

    // Monomial condition: closed under removing one from either coordinate.
    bool is_staircase() const { return staircase_; }
    // For a non-staircase set: some (point, missing predecessor) witness.
    std::optional<std::pair<Point, Point>> missing_predecessor() const;

    bool same_points(const PointSet& o) const;  // as unordered sets

    std::string text() const;

private:
    std::vector<Point> pts_;
    bool staircase_ = true;
};

// Throws std::invalid_argument naming a missing predecessor point.
void require_staircase(const PointSet& R, const char* what);

// All staircases with exactly r points (column heights = partitions of r),
// points ordered by (i, j).
std::vector<PointSet> all_staircases(int r);

// The linear form attached to a lattice point: i*x + j*y + z.
MultiPoly linear_form(Point p);

// The matrix entry generator: exact sum over the Stirling-weighted grid.
MultiPoly cpoly(int k1, int k2, int ell);

// Independent construction through the truncated exponential generating
// function; agrees with cpoly everywhere.
MultiPoly cpoly_egf(int k1, int k2, int ell);

// The r x (ell+1) matrix with row p = (C(p.i, p.j, 0), ..., C(p.i, p.j, ell)).
class CMatrix {
public:
    static CMatrix build(const PointSet& R, int ell);

    std::size_t rows() const { return entries_.size(); }
    std::size_t cols() const { return entries_.empty() ? 0 : entries_[0].size(); }
    const MultiPoly& entry(std::size_t r, std::size_t c) const { return entries_[r][c]; }
    const std::vector<MultiPoly>& row(std::size_t r) const { return entries_[r]; }
    const PointSet& points() const { return points_; }

private:
    PointSet points_;
    std::vector<std::vector<MultiPoly>> entries_;
};

// prod_{(i,j) in R} (s - A_ij), monic of degree |R|.
UniPoly b_R(const PointSet& R);

// M_{R, ell} * coeffs with ell = coeffs.size()-1; all-zero means `coeffs`
// solves the homogenized system.
std::vector<MultiPoly> residual(const PointSet& R, const std::vector<MultiPoly>& coeffs);
std::vector<MultiPoly> residual(const PointSet& R, const UniPoly& b);

// Root-encoded solution of the system for a staircase R: returns
// prod (s - A_ij)^{n_ij} after verifying the residual vanishes exactly.
UniPoly solve(const PointSet& R, const std::vector<int>& mults);

enum class LemmaPart { i, ii, iii };
bool lemma_comb_check(int k1, int k2, int ell, LemmaPart part);

// ---- determinants ---------------------------------------------------------

// Fraction-free (Bareiss) determinant over any exact ring; every division
// performed is exact.
template <typename TRing>
TRing det_bareiss_grid(std::vector<std::vector<TRing>> m);

MultiPoly det_bareiss(const PointSet& R);

// Vandermonde closed form for staircase R (prefactor 1/prod i!j!); computed
// over the integers with the final division asserted exact, and oriented so
// that it equals det_bareiss for the same row order.
MultiPoly det_closed_form(const PointSet& R);

struct CounterexampleReport {
    bool det_matches_printed = false;  // against the published factored value
    bool residual_zero = false;        // denominator-cleared solution check
    bool factorization = false;        // det(M_R) = det(M_R0) * y^4 * q
    MultiPoly det;                     // computed det(M_R)
    MultiPoly printed_expansion;       // expansion of the published factors
    bool all() const { return det_matches_printed && residual_zero && factorization; }
};

CounterexampleReport verify_counterexample();

// The 7-point non-staircase set and its 6-point staircase subset.
PointSet counterexample_set();
PointSet counterexample_staircase_subset();

// Uniform random composition of `total` into `parts` positive parts.
std::vector<int> random_composition(int total, int parts, DetRng& rng);

// ---- template implementation ----------------------------------------------

namespace detail {
inline MultiPoly ring_one(const MultiPoly*) { return MultiPoly::constant(1); }
inline Int ring_one(const Int*) { return 1; }
inline Rat ring_one(const Rat*) { return 1; }
inline bool ring_is_zero(const MultiPoly& v) { return v.is_zero(); }
inline bool ring_is_zero(const Int& v) { return v == 0; }
inline bool ring_is_zero(const Rat& v) { return v == 0; }
inline MultiPoly ring_exact_div(const MultiPoly& a, const MultiPoly& b) { return exact_div(a, b); }
inline Int ring_exact_div(const Int& a, const Int& b) { return exact_quotient(a, b); }
inline Rat ring_exact_div(const Rat& a, const Rat& b) { return a / b; }
}  // namespace detail

template <typename TRing>
TRing det_bareiss_grid(std::vector<std::vector<TRing>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return detail::ring_one(static_cast<const TRing*>(nullptr));
    TRing prev = detail::ring_one(static_cast<const TRing*>(nullptr));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (detail::ring_is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && detail::ring_is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return TRing{};  // singular
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                TRing num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = detail::ring_exact_div(num, prev);
            }
            m[i][k] = TRing{};
        }
        prev = m[k][k];
    }
    TRing det = m[n - 1][n - 1];
    return negate ? TRing{} - det : det;
}

}  // namespace stirsys
