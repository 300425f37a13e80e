#include "rmks/serialize.hpp"

#include "rmks/quadform.hpp"

namespace rmks {
namespace serialize {

using numfield::FieldElement;
using numfield::FieldPtr;
using numfield::NumberField;

json to_json(const QQ& q) { return format_rational(q); }

QQ qq_from_json(const json& j) {
    if (j.is_number_integer()) return QQ(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error("ParseError", "expected a rational as string or integer");
}

json to_json(const Mat<QQ>& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<QQ> qmat_from_json(const json& j) {
    if (!j.is_array()) throw Error("ParseError", "expected an array of rows");
    size_t r = j.size(), c = r ? j[0].size() : 0;
    Mat<QQ> m(r, c, QQ(0));
    for (size_t i = 0; i < r; ++i) {
        if (j[i].size() != c) throw Error("ParseError", "ragged matrix rows");
        for (size_t k = 0; k < c; ++k) m.at(i, k) = qq_from_json(j[i][k]);
    }
    return m;
}

json to_json(const Mat<ZZ>& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<ZZ> zmat_from_json(const json& j) {
    Mat<QQ> q = qmat_from_json(j);
    Mat<ZZ> m(q.rows(), q.cols(), ZZ(0));
    for (size_t i = 0; i < q.rows(); ++i)
        for (size_t k = 0; k < q.cols(); ++k) {
            if (q.at(i, k).get_den() != 1)
                throw Error("ParseError", "expected integer matrix entries");
            m.at(i, k) = q.at(i, k).get_num();
        }
    return m;
}

json to_json(const FieldPtr& F) {
    json j;
    json poly = json::array();
    for (int i = 0; i <= F->min_poly().degree(); ++i)
        poly.push_back(to_json(F->min_poly().coeff(i)));
    j["min_poly"] = std::move(poly);
    json roots = json::array();
    for (const auto& iv : F->real_roots())
        roots.push_back(json::array({to_json(iv.lo), to_json(iv.hi)}));
    j["roots"] = std::move(roots);
    if (F->layered()) {
        json rad = json::array();
        for (const auto& c : F->radicand().coords()) rad.push_back(to_json(c));
        j["sqrt_of"] = std::move(rad);
        j["base_root"] = F->designated_root();
    }
    return j;
}

FieldPtr field_from_json(const json& j) {
    std::vector<QQ> coeffs;
    for (const auto& c : j.at("min_poly")) coeffs.push_back(qq_from_json(c));
    // serialized fields were validated at creation; degree > 3 stays attested
    FieldPtr base = NumberField::create(QPoly(std::move(coeffs)), true);
    if (!j.contains("sqrt_of")) return base;
    std::vector<QQ> rad;
    for (const auto& c : j.at("sqrt_of")) rad.push_back(qq_from_json(c));
    return NumberField::with_sqrt(base, base->element(std::move(rad)),
                                  j.at("base_root").get<int>());
}

json to_json(const FieldElement& e) {
    json arr = json::array();
    for (const auto& c : e.coords()) arr.push_back(to_json(c));
    return arr;
}

FieldElement element_from_json(const json& j, const FieldPtr& F) {
    std::vector<QQ> coords;
    if (j.is_array())
        for (const auto& c : j) coords.push_back(qq_from_json(c));
    else
        coords.push_back(qq_from_json(j)); // bare rational
    coords.resize(F->dim(), QQ(0));
    return F->element(std::move(coords));
}

json to_json(const rmhodge::RMStructure& S) {
    json j;
    j["field"] = to_json(S.F);
    j["m"] = S.m;
    json action = json::array();
    for (const auto& r : S.rho) action.push_back(to_json(r));
    j["action"] = std::move(action);
    j["psi"] = to_json(S.psi.gram);
    return j;
}

rmhodge::RMStructure structure_from_json(const json& j) {
    FieldPtr F = field_from_json(j.at("field"));
    std::vector<Mat<QQ>> rho;
    for (const auto& r : j.at("action")) rho.push_back(qmat_from_json(r));
    return rmhodge::make_structure(F, j.at("m").get<int>(), std::move(rho),
                                   quadform::make_qform(qmat_from_json(j.at("psi"))));
}

json to_json(const rmhodge::PeriodData& P) {
    json j;
    j["field"] = to_json(P.K);
    j["root_index"] = P.emb.root_index;
    json x = json::array(), y = json::array();
    for (const auto& e : P.x) x.push_back(to_json(e));
    for (const auto& e : P.y) y.push_back(to_json(e));
    j["x"] = std::move(x);
    j["y"] = std::move(y);
    return j;
}

rmhodge::PeriodData period_from_json(const json& j, const quadform::QBilinearForm& psi) {
    FieldPtr K = field_from_json(j.at("field"));
    std::vector<FieldElement> x, y;
    for (const auto& e : j.at("x")) x.push_back(element_from_json(e, K));
    for (const auto& e : j.at("y")) y.push_back(element_from_json(e, K));
    return rmhodge::make_period(K, j.at("root_index").get<int>(), std::move(x), std::move(y),
                                psi);
}

json to_json(const spinbranch::WeightMultiset& W) {
    json arr = json::array();
    for (const auto& [w, m] : W.weights) {
        json entry;
        entry["weight"] = w;
        entry["mult"] = m;
        arr.push_back(std::move(entry));
    }
    json j;
    j["rank"] = W.rank;
    j["weights"] = std::move(arr);
    return j;
}

spinbranch::WeightMultiset multiset_from_json(const json& j) {
    spinbranch::WeightMultiset W;
    W.rank = j.at("rank").get<int>();
    for (const auto& entry : j.at("weights"))
        W.add(entry.at("weight").get<std::vector<int>>(), entry.at("mult").get<long long>());
    return W;
}

json to_json(const cliffordks::CliffordElement& x) {
    json j = json::object();
    for (const auto& [mask, c] : x.coeffs()) j[std::to_string(mask)] = to_json(c);
    return j;
}

Mat<QQ> gram_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s.rfind("diag(", 0) == 0 && s.back() == ')') {
            std::vector<QQ> d;
            std::string body = s.substr(5, s.size() - 6);
            size_t pos = 0;
            while (pos <= body.size() && !body.empty()) {
                size_t comma = body.find(',', pos);
                std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                              : comma - pos);
                d.push_back(parse_rational(tok));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            Mat<QQ> m(d.size(), d.size(), QQ(0));
            for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
            return m;
        }
        return quadform::fixture_gram(s);
    }
    return qmat_from_json(j);
}

} // namespace serialize
} // namespace rmks
