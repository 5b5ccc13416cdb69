#include "stirsys/serialize.hpp"

#include <stdexcept>

namespace stirsys {

namespace {

template <typename C>
Json poly_terms_to_json(const BasicPoly<C>& p) {
    Json arr = Json::array();
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [key, coeff] = *it;
        Json rec = Json::array();
        rec.push_back(monom::exponent(key, Var::x));
        rec.push_back(monom::exponent(key, Var::y));
        rec.push_back(monom::exponent(key, Var::z));
        if (int et = monom::exponent(key, Var::t); et != 0) rec.push_back(et);
        rec.push_back(coeff_to_string(coeff));
        arr.push_back(std::move(rec));
    }
    return arr;
}

}  // namespace

Json poly_to_json(const MultiPoly& p) { return poly_terms_to_json(p); }
Json poly_to_json(const RatPoly& p) { return poly_terms_to_json(p); }

MultiPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    MultiPoly p;
    for (const Json& rec : j) {
        if (!rec.is_array() || rec.size() < 4 || rec.size() > 5)
            throw std::invalid_argument("polynomial term must be [i,j,k,c] or [i,j,k,m,c]");
        int ex = rec[0].get<int>(), ey = rec[1].get<int>(), ez = rec[2].get<int>();
        int et = rec.size() == 5 ? rec[3].get<int>() : 0;
        Int c;
        coeff_from_string(rec[rec.size() - 1].get<std::string>(), c);
        p += MultiPoly::monomial(ex, ey, ez, et, c);
    }
    return p;
}

Json pointset_to_json(const PointSet& R) {
    Json arr = Json::array();
    for (const Point& p : R) arr.push_back(Json::array({p.i, p.j}));
    return arr;
}

PointSet pointset_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("point set JSON must be an array");
    std::vector<Point> pts;
    for (const Json& rec : j) {
        if (!rec.is_array() || rec.size() != 2)
            throw std::invalid_argument("point must be [i, j]");
        pts.push_back({rec[0].get<int>(), rec[1].get<int>()});
    }
    return PointSet(std::move(pts));
}

Json unipoly_to_json(const UniPoly& b) {
    Json arr = Json::array();
    for (const MultiPoly& c : b.coeffs()) arr.push_back(poly_to_json(c));
    return arr;
}

Json cmatrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m.entry(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json reduction_to_json(const ReductionResult& r) {
    Json j;
    j["case"] = r.rel.case_name();
    j["rel"] = r.rel.text();
    j["reduced_set"] = pointset_to_json(r.reduced);
    j["r0"] = r.r0;
    Json classes = Json::array();
    for (const auto& cls : r.classes) {
        Json c = Json::array();
        for (const Point& p : cls) c.push_back(Json::array({p.i, p.j}));
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    Json drops = Json::array();
    for (const RowCertificate& cert : r.dropped_rows) {
        Json d;
        d["point"] = Json::array({cert.dropped.i, cert.dropped.j});
        Json combo = Json::array();
        for (const auto& [p, w] : cert.combination)
            combo.push_back(Json::array({p.i, p.j, w.str()}));
        d["certificate"] = std::move(combo);
        drops.push_back(std::move(d));
    }
    j["dropped_rows"] = std::move(drops);
    return j;
}

Json report_to_json(const IdentityReport& r) {
    Json j;
    j["id"] = r.id;
    Json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["left"] = r.left;
    j["right"] = r.right;
    j["verdict"] = r.verdict;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace stirsys
