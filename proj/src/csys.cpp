#include "stirsys/csys.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stirsys/stirling.hpp"
#include "stirsys/truncseries.hpp"

namespace stirsys {

std::string point_text(Point p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::set<Point> seen;
    for (const Point& p : pts_) {
        if (p.i < 0 || p.j < 0)
            throw std::invalid_argument("point with negative coordinate " + point_text(p));
        if (!seen.insert(p).second)
            throw std::invalid_argument("duplicate point " + point_text(p));
    }
    staircase_ = !missing_predecessor().has_value();
}

PointSet PointSet::parse(const std::string& text) {
    std::vector<Point> pts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto comma = part.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("malformed point (expected \"i,j\"): " + part);
        try {
            pts.push_back({std::stoi(part.substr(0, comma)), std::stoi(part.substr(comma + 1))});
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed point: " + part);
        }
    }
    if (pts.empty()) throw std::invalid_argument("empty point list");
    return PointSet(std::move(pts));
}

bool PointSet::contains(Point p) const {
    return std::find(pts_.begin(), pts_.end(), p) != pts_.end();
}

std::optional<std::size_t> PointSet::index_of(Point p) const {
    auto it = std::find(pts_.begin(), pts_.end(), p);
    if (it == pts_.end()) return std::nullopt;
    return std::size_t(it - pts_.begin());
}

std::optional<std::pair<Point, Point>> PointSet::missing_predecessor() const {
    for (const Point& p : pts_) {
        if (p.i > 0 && !contains({p.i - 1, p.j})) return std::pair{p, Point{p.i - 1, p.j}};
        if (p.j > 0 && !contains({p.i, p.j - 1})) return std::pair{p, Point{p.i, p.j - 1}};
    }
    return std::nullopt;
}

bool PointSet::same_points(const PointSet& o) const {
    if (size() != o.size()) return false;
    std::vector<Point> a = pts_, b = o.pts_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::string PointSet::text() const {
    std::string out;
    for (const Point& p : pts_) {
        if (!out.empty()) out += ";";
        out += std::to_string(p.i) + "," + std::to_string(p.j);
    }
    return out;
}

void require_staircase(const PointSet& R, const char* what) {
    auto witness = R.missing_predecessor();
    if (!witness) return;
    throw std::invalid_argument(std::string(what) + ": set fails the monomial condition, point " +
                                point_text(witness->first) + " lacks predecessor " +
                                point_text(witness->second));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<PointSet> all_staircases(int r) {
    if (r < 1) throw std::invalid_argument("staircase size must be positive");
    std::vector<std::vector<int>> partitions;
    std::vector<int> cur;
    gen_partitions(r, r, cur, partitions);
    std::vector<PointSet> out;
    out.reserve(partitions.size());
    for (const auto& heights : partitions) {
        std::vector<Point> pts;
        pts.reserve(r);
        for (int i = 0; i < int(heights.size()); ++i)
            for (int j = 0; j < heights[i]; ++j) pts.push_back({i, j});
        out.push_back(PointSet(std::move(pts)));
    }
    return out;
}

MultiPoly linear_form(Point p) {
    std::vector<MultiPoly::Term> terms;
    terms.emplace_back(monom::make(0, 0, 1, 0), Int(1));
    if (p.j > 0) terms.emplace_back(monom::make(0, 1, 0, 0), Int(p.j));
    if (p.i > 0) terms.emplace_back(monom::make(1, 0, 0, 0), Int(p.i));
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return MultiPoly::from_sorted_terms(std::move(terms));
}

MultiPoly cpoly(int k1, int k2, int ell) {
    if (k1 < 0 || k2 < 0 || ell < 0) throw std::invalid_argument("cpoly needs non-negative arguments");

    static std::mutex cache_mutex;
    static std::map<std::array<int, 3>, MultiPoly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({k1, k2, ell});
        if (it != cache.end()) return it->second;
    }

    std::vector<MultiPoly::Term> terms;
    for (int i1 = k1; i1 <= ell; ++i1) {
        Int s1 = stirling2(i1, k1);
        if (s1 == 0) continue;
        for (int i2 = k2; i2 <= ell - i1; ++i2) {
            Int c = binomial(ell, i1) * binomial(ell - i1, i2) * s1 * stirling2(i2, k2);
            if (c == 0) continue;
            terms.emplace_back(monom::make(i1, i2, ell - i1 - i2, 0), std::move(c));
        }
    }
    // emitted with i1 major ascending, i2 ascending: already in key order
    MultiPoly result = MultiPoly::from_sorted_terms(std::move(terms));

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.try_emplace({k1, k2, ell}, result);
    return result;
}

MultiPoly cpoly_egf(int k1, int k2, int ell) {
    if (k1 < 0 || k2 < 0 || ell < 0) throw std::invalid_argument("cpoly_egf needs non-negative arguments");
    TruncSeries ex = TruncSeries::exp_t(MultiPoly::variable(Var::x), ell) - TruncSeries::one(ell);
    TruncSeries ey = TruncSeries::exp_t(MultiPoly::variable(Var::y), ell) - TruncSeries::one(ell);
    TruncSeries s = ex.pow(k1) * ey.pow(k2) * TruncSeries::exp_t(MultiPoly::variable(Var::z), ell);
    return div_scalar_exact(s.coeff(ell), factorial(k1) * factorial(k2));
}

CMatrix CMatrix::build(const PointSet& R, int ell) {
    if (ell < 0) throw std::invalid_argument("matrix length must be non-negative");
    CMatrix m;
    m.points_ = R;
    m.entries_.reserve(R.size());
    for (const Point& p : R) {
        std::vector<MultiPoly> row;
        row.reserve(ell + 1);
        for (int c = 0; c <= ell; ++c) row.push_back(cpoly(p.i, p.j, c));
        m.entries_.push_back(std::move(row));
    }
    return m;
}

UniPoly b_R(const PointSet& R) {
    std::vector<MultiPoly> roots;
    roots.reserve(R.size());
    for (const Point& p : R) roots.push_back(linear_form(p));
    return UniPoly::from_roots(roots, std::vector<int>(R.size(), 1));
}

std::vector<MultiPoly> residual(const PointSet& R, const std::vector<MultiPoly>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient vector");
    int ell = int(coeffs.size()) - 1;
    std::vector<MultiPoly> out;
    out.reserve(R.size());
    for (const Point& p : R) {
        MultiPoly acc;
        for (int c = 0; c <= ell; ++c) {
            if (coeffs[c].is_zero()) continue;
            acc += cpoly(p.i, p.j, c) * coeffs[c];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<MultiPoly> residual(const PointSet& R, const UniPoly& b) {
    return residual(R, b.coeffs());
}

UniPoly solve(const PointSet& R, const std::vector<int>& mults) {
    require_staircase(R, "solve");
    if (mults.size() != R.size())
        throw std::invalid_argument("solve: need one multiplicity per point");
    std::vector<MultiPoly> roots;
    roots.reserve(R.size());
    for (std::size_t k = 0; k < R.size(); ++k) {
        if (mults[k] <= 0)
            throw std::invalid_argument("solve: multiplicity at " + point_text(R[k]) +
                                        " must be positive");
        roots.push_back(linear_form(R[k]));
    }
    UniPoly b = UniPoly::from_roots(roots, mults);
    for (const MultiPoly& e : residual(R, b))
        if (!e.is_zero()) throw std::logic_error("solve: residual is nonzero");
    return b;
}

bool lemma_comb_check(int k1, int k2, int ell, LemmaPart part) {
    auto d_w = [&](int i, int j) { return binomial(k1, i) * binomial(k2, j) * factorial(i) * factorial(j); };
    auto c_w = [&](int i, int j) {
        Int v = binomial(k1, i) * binomial(k2, j);
        return ((k1 + k2 - i - j) % 2) ? Int(-v) : v;
    };
    switch (part) {
        case LemmaPart::i: {
            MultiPoly lhs;
            for (int i = 0; i <= k1; ++i)
                for (int j = 0; j <= k2; ++j) lhs += cpoly(i, j, ell).scaled(d_w(i, j));
            return lhs == linear_form({k1, k2}).pow(ell);
        }
        case LemmaPart::ii: {
            MultiPoly rhs;
            for (int i = 0; i <= k1; ++i)
                for (int j = 0; j <= k2; ++j) rhs += linear_form({i, j}).pow(ell).scaled(c_w(i, j));
            return cpoly(k1, k2, ell).scaled(factorial(k1) * factorial(k2)) == rhs;
        }
        case LemmaPart::iii: {
            MultiPoly lhs, rhs;
            for (int i = 0; i <= k1; ++i)
                for (int j = 0; j <= k2; ++j) {
                    if (i == k1 && j == k2) continue;
                    lhs += linear_form({i, j}).pow(ell).scaled(c_w(i, j));
                    rhs += cpoly(i, j, ell).scaled(d_w(i, j));
                }
            return lhs == -rhs;
        }
    }
    throw std::invalid_argument("unknown lemma part");
}

MultiPoly det_bareiss(const PointSet& R) {
    if (R.empty()) throw std::invalid_argument("determinant of empty point set");
    CMatrix m = CMatrix::build(R, int(R.size()) - 1);
    std::vector<std::vector<MultiPoly>> grid;
    grid.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) grid.push_back(m.row(r));
    return det_bareiss_grid(std::move(grid));
}

MultiPoly det_closed_form(const PointSet& R) {
    require_staircase(R, "det_closed_form");
    if (R.size() < 2) return det_bareiss(R);
    MultiPoly prod = MultiPoly::constant(1);
    for (std::size_t q = 0; q < R.size(); ++q)
        for (std::size_t p = 0; p < q; ++p)
            prod *= linear_form(R[q]) - linear_form(R[p]);
    Int denom = 1;
    for (const Point& p : R) denom *= factorial(p.i) * factorial(p.j);
    return div_scalar_exact(prod, denom);  // integrality of the result is asserted here
}

PointSet counterexample_set() {
    return PointSet({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 4}});
}

PointSet counterexample_staircase_subset() {
    return PointSet({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}});
}

CounterexampleReport verify_counterexample() {
    CounterexampleReport rep;
    const PointSet R = counterexample_set();

    rep.det = det_bareiss(R);

    // Published factored value: -2 x^6 y^7 (2x-y)(3x-y)(x-2y)(3x-2y)(x-y)^2 q
    // with q = 11x^2 - 42xy + 37y^2.
    const MultiPoly q = MultiPoly::parse("11 * x^2 - 42 * x^1 y^1 + 37 * y^2");
    MultiPoly printed = MultiPoly::monomial(6, 7, 0, 0, Int(-2));
    printed *= MultiPoly::parse("2 * x^1 - y^1");
    printed *= MultiPoly::parse("3 * x^1 - y^1");
    printed *= MultiPoly::parse("x^1 - 2 * y^1");
    printed *= MultiPoly::parse("3 * x^1 - 2 * y^1");
    printed *= MultiPoly::parse("x^1 - y^1").pow(2);
    printed *= q;
    rep.printed_expansion = printed;
    rep.det_matches_printed = (rep.det == printed);

    // Denominator-cleared solution: the six linear factors times
    // p(s) = q*s + w, so the leading coefficient of the vector is q itself.
    const MultiPoly z = MultiPoly::variable(Var::z);
    std::vector<MultiPoly> roots = {
        z,
        z + MultiPoly::variable(Var::y),
        z + MultiPoly::variable(Var::y).scaled(2),
        z + MultiPoly::variable(Var::x).scaled(3),
        z + MultiPoly::variable(Var::x),
        z + MultiPoly::variable(Var::x).scaled(2),
    };
    UniPoly base = UniPoly::from_roots(roots, std::vector<int>(roots.size(), 1));
    const MultiPoly w = MultiPoly::parse(
        "6 * x^3 - 175 * y^3 - 11 * x^2 z^1 - 77 * x^2 y^1 + 42 * x^1 y^1 z^1 - 37 * y^2 z^1 + "
        "222 * x^1 y^2");
    UniPoly cleared = base * UniPoly::from_coeffs({w, q});
    rep.residual_zero = true;
    for (const MultiPoly& e : residual(R, cleared))
        if (!e.is_zero()) rep.residual_zero = false;

    // det(M_R) = det(M_R0) * y^4 * q for the 6-point staircase subset.
    MultiPoly rhs = det_bareiss(counterexample_staircase_subset());
    rhs *= MultiPoly::monomial(0, 4, 0, 0, Int(1));
    rhs *= q;
    rep.factorization = (rep.det == rhs);
    return rep;
}

std::vector<int> random_composition(int total, int parts, DetRng& rng) {
    if (parts < 1 || total < parts)
        throw std::invalid_argument("composition needs 1 <= parts <= total");
    if (parts == 1) return {total};
    // choose parts-1 distinct cut positions in {1, ..., total-1}
    std::vector<int> positions(total - 1);
    for (int i = 0; i < total - 1; ++i) positions[i] = i + 1;
    for (int k = 0; k < parts - 1; ++k) {
        std::size_t pick = k + std::size_t(rng.below(positions.size() - k));
        std::swap(positions[k], positions[pick]);
    }
    std::vector<int> cuts(positions.begin(), positions.begin() + (parts - 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> out;
    out.reserve(parts);
    int prev = 0;
    for (int c : cuts) {
        out.push_back(c - prev);
        prev = c;
    }
    out.push_back(total - prev);
    return out;
}

}  // namespace stirsys
