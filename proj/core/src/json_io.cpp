#include "latreal/json_io.hpp"

#include "latreal/errors.hpp"

namespace latreal {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const AffineExpr& e) { return e.str(); }

Json to_json(const AffineMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

Json to_json(const GeneralizedCartan& a) {
    Json rows = Json::array();
    for (const auto& row : a.entries()) rows.push_back(row);
    return rows;
}

Json to_json(const BraidingDiagram& d) { return format_diagram(d); }

Json to_json(const Family& f) {
    Json j;
    j["params"] = f.free_params;
    Json forms = Json::array();
    for (const auto& form : f.forms) {
        Json g;
        g["chamber_class"] = form.chamber_class;
        g["diagram"] = format_diagram(form.diagram);
        g["m"] = to_json(form.m);
        forms.push_back(std::move(g));
    }
    j["forms"] = std::move(forms);
    Json congruences = Json::array();
    for (const auto& c : f.congruences) {
        Json g;
        g["expr"] = c.expr.str();
        g["mod"] = to_string(c.modulus);
        congruences.push_back(std::move(g));
    }
    j["congruences"] = std::move(congruences);
    return j;
}

Json to_json(const RealisationReport& r) {
    Json j;
    j["verdict"] = r.has_solutions ? "solutions" : "no_solution";
    j["chambers"] = r.chambers;
    Json classes = Json::array();
    for (const auto& d : r.class_diagrams) classes.push_back(format_diagram(d));
    j["classes"] = std::move(classes);
    Json families = Json::array();
    for (const auto& f : r.families) families.push_back(to_json(f));
    j["families"] = std::move(families);
    if (r.witness) {
        Json w;
        w["chambers"] = {r.witness->chamber_a, r.witness->chamber_b};
        w["values"] = {to_string(r.witness->value_a), to_string(r.witness->value_b)};
        w["detail"] = r.witness->detail;
        j["witness"] = std::move(w);
    }
    return j;
}

Json to_json(const GroupoidGraph& g) {
    Json j;
    j["initial"] = g.initial;
    Json chambers = Json::array();
    for (const auto& c : g.chambers) {
        Json jc;
        Json basis = Json::array();
        for (const auto& col : c.basis) basis.push_back(col);
        jc["basis"] = std::move(basis);
        jc["diagram"] = format_diagram(c.diagram);
        jc["cartan"] = to_json(c.cartan);
        Json classes = Json::array();
        for (auto rc : c.classes) classes.push_back(to_string(rc));
        jc["classes"] = std::move(classes);
        chambers.push_back(std::move(jc));
    }
    j["chambers"] = std::move(chambers);
    Json edges = Json::array();
    for (const auto& [key, to] : g.edges) {
        Json e;
        e["from"] = key.first;
        e["k"] = key.second + 1;
        e["to"] = to;
        edges.push_back(std::move(e));
    }
    j["edges"] = std::move(edges);
    RootSystem rs = positive_roots(g);
    Json roots = Json::array();
    for (const auto& v : rs.positive_roots) roots.push_back(v);
    j["positive_roots"] = std::move(roots);
    j["positive_root_count"] = rs.positive_roots.size();
    return j;
}

Json to_json(const std::vector<RelationReportEntry>& report) {
    Json out = Json::array();
    for (const auto& e : report) {
        Json j;
        switch (e.spec.kind) {
        case RelationSpec::Kind::Truncation:
            j["kind"] = "truncation";
            j["root"] = e.spec.root;
            j["power"] = e.spec.power;
            j["simple"] = e.spec.simple;
            break;
        case RelationSpec::Kind::Serre:
            j["kind"] = "serre";
            j["i"] = e.spec.serre_i + 1;
            j["j"] = e.spec.serre_j + 1;
            j["required"] = e.spec.required;
            break;
        case RelationSpec::Kind::Extra:
            j["kind"] = "extra";
            j["tag"] = e.spec.tag;
            break;
        }
        j["degree"] = e.spec.degree;
        j["status"] = to_string(e.status);
        j["note"] = e.note;
        out.push_back(std::move(j));
    }
    return out;
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (!j.is_string() && !j.is_number_integer())
        throw SchemaError(path + ": expected a rational string");
    if (j.is_number_integer()) return Rational(j.get<long long>());
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw SchemaError(path + ": bad rational '" + j.get<std::string>() + "'");
    return *r;
}

AffineExpr affine_from_json(const Json& j, const std::string& path) {
    if (!j.is_string() && !j.is_number_integer())
        throw SchemaError(path + ": expected an affine expression string");
    if (j.is_number_integer()) return AffineExpr(Rational(j.get<long long>()));
    auto e = parse_affine(j.get<std::string>());
    if (!e) throw SchemaError(path + ": bad affine expression '" + j.get<std::string>() + "'");
    return *e;
}

} // namespace latreal
