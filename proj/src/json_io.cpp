#include "krstab/json_io.hpp"

namespace krstab {

namespace {

std::vector<int> int_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const Json& e : j) {
        if (!e.is_number_integer()) throw invalid_input(std::string(what) + ": expected integers");
        out.push_back(e.get<int>());
    }
    return out;
}

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw invalid_input(std::string(what) + ": missing \"" + key + "\"");
    return j.at(key);
}

} // namespace

Json to_json(const Minor& m) {
    return Json{{"rows", m.rows()}, {"cols", m.cols()}};
}

Json to_json(const Shape& s) {
    return Json(s.parts());
}

Json to_json(const Bitableau& b) {
    Json factors = Json::array();
    for (const Minor& f : b.factors()) factors.push_back(to_json(f));
    return Json{{"factors", std::move(factors)}};
}

Json to_json(const TwoRowArray& a) {
    return Json{{"u", a.u()}, {"v", a.v()}};
}

Json to_json(const Monomial& m) {
    Json cells = Json::array();
    for (const auto& [c, e] : m.exps()) cells.push_back(Json::array({c.row, c.col, e}));
    return Json{{"cells", std::move(cells)}};
}

Json to_json(const Multidegree& v) {
    return Json{{"rows", v.row_deg()}, {"cols", v.col_deg()}};
}

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json{{"mono", to_json(m)}, {"coef", rational_to_string(c)}});
    return Json{{"terms", std::move(terms)}};
}

Json to_json(const StandardRep& r) {
    Json terms = Json::array();
    for (const auto& [b, c] : r)
        terms.push_back(Json{{"bitableau", to_json(b)}, {"coef", rational_to_string(c)}});
    return Json{{"terms", std::move(terms)}};
}

Minor minor_from_json(const Json& j) {
    return Minor(int_vector(field(j, "rows", "minor"), "minor rows"),
                 int_vector(field(j, "cols", "minor"), "minor cols"));
}

Shape shape_from_json(const Json& j) {
    return Shape(int_vector(j, "shape"));
}

Bitableau bitableau_from_json(const Json& j) {
    const Json& factors = field(j, "factors", "bitableau");
    if (!factors.is_array()) throw invalid_input("bitableau: \"factors\" must be an array");
    std::vector<Minor> out;
    for (const Json& f : factors) out.push_back(minor_from_json(f));
    return Bitableau(out);
}

TwoRowArray array_from_json(const Json& j) {
    return TwoRowArray(int_vector(field(j, "u", "array"), "array u"),
                       int_vector(field(j, "v", "array"), "array v"));
}

Monomial monomial_from_json(const Json& j) {
    const Json& cells = field(j, "cells", "monomial");
    if (!cells.is_array()) throw invalid_input("monomial: \"cells\" must be an array");
    std::vector<std::pair<Cell, int>> exps;
    for (const Json& c : cells) {
        std::vector<int> t = int_vector(c, "monomial cell");
        if (t.size() != 3) throw invalid_input("monomial: cells are [row,col,exp] triples");
        exps.push_back({{t[0], t[1]}, t[2]});
    }
    return Monomial(exps);
}

Multidegree multidegree_from_json(const Json& j) {
    return Multidegree(int_vector(field(j, "rows", "multidegree"), "multidegree rows"),
                       int_vector(field(j, "cols", "multidegree"), "multidegree cols"));
}

Polynomial polynomial_from_json(const Json& j) {
    const Json& terms = field(j, "terms", "polynomial");
    if (!terms.is_array()) throw invalid_input("polynomial: \"terms\" must be an array");
    Polynomial p;
    for (const Json& t : terms) {
        const Json& coef = field(t, "coef", "polynomial term");
        if (!coef.is_string()) throw invalid_input("polynomial: \"coef\" must be a string");
        p.add_term(monomial_from_json(field(t, "mono", "polynomial term")),
                   rational_from_string(coef.get<std::string>()));
    }
    return p;
}

} // namespace krstab
