#include "stirsys/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stirsys {

namespace {

// Congruence classes of R's points modulo the relation, keyed by the line
// invariant (pos: b'i - a'j, neg: b'i + a'j, axis: the surviving
// coordinate).  Classes are listed by first occurrence in R; members keep
// R's order.
std::vector<std::vector<Point>> congruence_classes(const PointSet& R, const QuotientRel& rel) {
    std::vector<long long> keys;
    keys.reserve(R.size());
    long long ap = 0, bp = 0;
    if (rel.kase == QuotientRel::Case::pos || rel.kase == QuotientRel::Case::neg) {
        auto [pa, pb] = rel.primitive();
        ap = pa;
        bp = pb;
    }
    for (const Point& p : R) {
        switch (rel.kase) {
            case QuotientRel::Case::x_zero: keys.push_back(p.j); break;
            case QuotientRel::Case::y_zero: keys.push_back(p.i); break;
            case QuotientRel::Case::pos: keys.push_back(bp * p.i - ap * p.j); break;
            case QuotientRel::Case::neg: keys.push_back(bp * p.i + ap * p.j); break;
        }
    }
    std::vector<std::vector<Point>> classes;
    std::map<long long, std::size_t> index;
    for (std::size_t k = 0; k < R.size(); ++k) {
        auto [it, fresh] = index.try_emplace(keys[k], classes.size());
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(R[k]);
    }
    return classes;
}

// GranPuta instance anchored at (k1,k2) with step (A,B): the vanishing
// combination (LHS minus RHS) of the lemma.
RowCertificate granputa_certificate(Point dropped, Point anchor, int A, int B) {
    RowCertificate cert;
    cert.dropped = dropped;
    for (int j = 1; j <= A; ++j)
        cert.combination.emplace_back(Point{anchor.i + j, anchor.j - B},
                                      falling_factorial(A, j) * binomial(anchor.i + j, anchor.i));
    for (int j = 1; j <= B; ++j)
        cert.combination.emplace_back(Point{anchor.i, anchor.j - B + j},
                                      -falling_factorial(B, j) * binomial(anchor.j - B + j, anchor.j - B));
    return cert;
}

std::size_t count_distinct_normal_forms(const PointSet& R, const QuotientRel& rel) {
    std::set<std::string> forms;
    for (const Point& p : R) forms.insert(rel.reduce(linear_form(p)).to_text());
    return forms.size();
}

}  // namespace

ReductionResult reduce_set(const PointSet& R, const QuotientRel& rel, RepPolicy policy) {
    require_staircase(R, "reduce_set");
    ReductionResult out;
    out.rel = rel;

    std::vector<Point> kept;
    switch (rel.kase) {
        case QuotientRel::Case::x_zero:
        case QuotientRel::Case::y_zero: {
            bool keep_x_axis = rel.kase == QuotientRel::Case::y_zero;
            for (const Point& p : R) {
                bool keep = keep_x_axis ? (p.j == 0) : (p.i == 0);
                if (keep) {
                    kept.push_back(p);
                } else {
                    // the whole row vanishes in the quotient
                    out.dropped_rows.push_back({p, {{p, Int(1)}}});
                }
            }
            break;
        }
        case QuotientRel::Case::pos: {
            auto [ap, bp] = rel.primitive();
            for (const Point& p : R) {
                Point below{p.i - int(ap), p.j - int(bp)};
                if (below.i < 0 || below.j < 0 || !R.contains(below)) {
                    kept.push_back(p);
                    continue;
                }
                // eq (Puti2) anchored just below p, pivot at offset (a',b')
                RowCertificate cert;
                cert.dropped = p;
                for (int i = 0; i <= ap; ++i) {
                    for (int j = 0; j <= bp; ++j) {
                        if (i == 0 && j == 0) continue;
                        Int w = falling_factorial(int(ap), i) * falling_factorial(int(bp), j) *
                                binomial(below.i + i, below.i) * binomial(below.j + j, below.j);
                        cert.combination.emplace_back(Point{below.i + i, below.j + j}, std::move(w));
                    }
                }
                out.dropped_rows.push_back(std::move(cert));
            }
            break;
        }
        case QuotientRel::Case::neg: {
            auto [ap, bp] = rel.primitive();
            out.classes = congruence_classes(R, rel);
            std::set<Point> reps;
            for (const auto& cls : out.classes) {
                Point rep = cls.front();
                for (const Point& p : cls) {
                    bool better = policy == RepPolicy::smallest_height ? p.j < rep.j : p.j > rep.j;
                    if (better) rep = p;
                }
                reps.insert(rep);
            }
            for (const Point& p : R)
                if (reps.count(p)) kept.push_back(p);
            for (const auto& cls : out.classes) {
                // Each dropped member is eliminated by the lemma instance
                // joining it to its chain neighbour on the representative's
                // side; this assigns distinct adjacent links to distinct
                // dropped points, so the certificates stay independent.
                std::vector<Point> chain = cls;
                std::sort(chain.begin(), chain.end(),
                          [](Point a, Point b) { return a.j < b.j; });
                std::size_t rep_at = 0;
                for (std::size_t i = 0; i < chain.size(); ++i)
                    if (reps.count(chain[i])) rep_at = i;
                for (std::size_t i = 0; i < chain.size(); ++i) {
                    if (i == rep_at) continue;
                    const Point q = chain[i];
                    if (i > rep_at) {
                        // anchor at q, reaching down to the member below
                        const Point below = chain[i - 1];
                        int n = (q.j - below.j) / int(bp);
                        out.dropped_rows.push_back(
                            granputa_certificate(q, q, n * int(ap), n * int(bp)));
                    } else {
                        // anchor at the member above so the pivot lands on q
                        const Point above = chain[i + 1];
                        int n = (above.j - q.j) / int(bp);
                        out.dropped_rows.push_back(
                            granputa_certificate(q, above, n * int(ap), n * int(bp)));
                    }
                }
            }
            break;
        }
    }

    out.reduced = PointSet(kept);
    out.r0 = count_distinct_normal_forms(R, rel);
    if (out.r0 != out.reduced.size())
        throw std::logic_error("reduce_set: representative count disagrees with distinct normal forms");
    return out;
}

std::vector<PointSet> all_rep_choices(const PointSet& R, const QuotientRel& rel) {
    if (rel.kase != QuotientRel::Case::neg)
        return {reduce_set(R, rel).reduced};
    auto classes = congruence_classes(R, rel);
    std::vector<std::size_t> pick(classes.size(), 0);
    std::vector<PointSet> out;
    for (;;) {
        std::set<Point> chosen;
        for (std::size_t c = 0; c < classes.size(); ++c) chosen.insert(classes[c][pick[c]]);
        std::vector<Point> pts;
        for (const Point& p : R)
            if (chosen.count(p)) pts.push_back(p);
        out.push_back(PointSet(std::move(pts)));
        std::size_t c = 0;
        while (c < classes.size() && ++pick[c] == classes[c].size()) pick[c++] = 0;
        if (c == classes.size()) break;
    }
    return out;
}

bool lemgp0_check(int a, int b, int k1, int k2, int ell) {
    if (a < 1 || b < 1) throw std::invalid_argument("lemgp0_check needs a, b > 0");
    if (k1 < 0 || k2 < 0 || ell < 0) throw std::invalid_argument("lemgp0_check: negative argument");
    MultiPoly sum;
    for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
            if (i == 0 && j == 0) continue;
            Int w = falling_factorial(a, i) * falling_factorial(b, j) * binomial(k1 + i, k1) * binomial(k2 + j, k2);
            sum += cpoly(k1 + i, k2 + j, ell).scaled(w);
        }
    }
    return QuotientRel::pos_rel(a, b).reduce(sum).is_zero();
}

bool lemgp_check(int a, int b, int k1, int k2, int ell) {
    if (a < 1 || b < 1) throw std::invalid_argument("lemgp_check needs a, b > 0");
    if (k2 < b) throw std::invalid_argument("lemgp_check needs k2 >= b");
    if (k1 < 0 || ell < 0) throw std::invalid_argument("lemgp_check: negative argument");
    MultiPoly lhs, rhs;
    for (int j = 1; j <= a; ++j)
        lhs += cpoly(k1 + j, k2 - b, ell).scaled(falling_factorial(a, j) * binomial(k1 + j, k1));
    for (int j = 1; j <= b; ++j)
        rhs += cpoly(k1, k2 - b + j, ell).scaled(falling_factorial(b, j) * binomial(k2 - b + j, k2 - b));
    return QuotientRel::neg_rel(a, b).congruent(lhs, rhs);
}

UniPoly solve_on_reps(const PointSet& R, const QuotientRel& rel, const PointSet& reps,
                      const std::vector<int>& mults) {
    require_staircase(R, "solve_quotient");
    if (mults.size() != reps.size())
        throw std::invalid_argument("solve_quotient: need one multiplicity per representative");
    std::vector<MultiPoly> roots;
    roots.reserve(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k) {
        if (mults[k] <= 0)
            throw std::invalid_argument("solve_quotient: multiplicity at " + point_text(reps[k]) +
                                        " must be positive");
        roots.push_back(linear_form(reps[k]));
    }
    UniPoly b = UniPoly::from_roots(roots, mults);
    for (const MultiPoly& e : residual(R, b))
        if (!rel.reduce(e).is_zero())
            throw std::logic_error("solve_quotient: residual does not vanish in the quotient");
    return b;
}

UniPoly solve_quotient(const PointSet& R, const QuotientRel& rel, const std::vector<int>& mults,
                       RepPolicy policy) {
    return solve_on_reps(R, rel, reduce_set(R, rel, policy).reduced, mults);
}

UniPoly b_R_reduced(const PointSet& R, const QuotientRel& rel) {
    std::vector<MultiPoly> roots;
    for (const Point& p : R) {
        MultiPoly nf = rel.reduce(linear_form(p));
        if (std::find(roots.begin(), roots.end(), nf) == roots.end()) roots.push_back(std::move(nf));
    }
    return UniPoly::from_roots(roots, std::vector<int>(roots.size(), 1));
}

bool check_system_equivalence(const PointSet& R, const QuotientRel& rel, int ell,
                               RepPolicy policy) {
    ReductionResult rr = reduce_set(R, rel, policy);
    CMatrix M = CMatrix::build(R, ell);

    for (const RowCertificate& cert : rr.dropped_rows) {
        for (int c = 0; c <= ell; ++c) {
            MultiPoly acc;
            for (const auto& [p, w] : cert.combination) {
                auto idx = R.index_of(p);
                if (!idx) return false;  // certificate references a row outside R
                acc += M.entry(*idx, c).scaled(w);
            }
            if (!rel.reduce(acc).is_zero()) return false;
        }
    }

    // The dropped-column submatrix of the certificates must be nonsingular:
    // that exhibits every dropped row inside the span of the kept rows.
    const auto& drops = rr.dropped_rows;
    if (drops.empty()) return true;
    std::map<Point, std::size_t> col;
    for (std::size_t k = 0; k < drops.size(); ++k) col[drops[k].dropped] = k;
    std::vector<std::vector<Int>> vd(drops.size(), std::vector<Int>(drops.size(), Int(0)));
    for (std::size_t k = 0; k < drops.size(); ++k)
        for (const auto& [p, w] : drops[k].combination) {
            auto it = col.find(p);
            if (it != col.end()) vd[k][it->second] += w;
        }
    return det_bareiss_grid(std::move(vd)) != 0;
}

MultiPoly det_quotient_closed_form(const PointSet& H, const QuotientRel& rel) {
    if (H.empty()) throw std::invalid_argument("determinant of empty point set");
    if (H.size() == 1) return rel.reduce(cpoly(H[0].i, H[0].j, 0));
    MultiPoly prod = MultiPoly::constant(1);
    for (std::size_t q = 0; q < H.size(); ++q)
        for (std::size_t p = 0; p < q; ++p)
            prod *= rel.reduce(linear_form(H[q]) - linear_form(H[p]));
    Int denom = 1;
    for (const Point& p : H) denom *= factorial(p.i) * factorial(p.j);
    return div_scalar_exact(prod, denom);
}

}  // namespace stirsys
