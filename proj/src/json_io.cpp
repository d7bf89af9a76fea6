#include "fillcert/json_io.hpp"

#include <fstream>

#include "fillcert/errors.hpp"

namespace fillcert {

namespace {

Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Integer integer_from(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw InvalidInput("expected an integer, got " + j.dump());
}

template <class T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad JSON field '") + key + "': " + e.what());
    }
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

Model model_for_dim(int dim) {
    if (dim == 2) return Model::Relative2;
    if (dim == 3) return Model::Cubical3;
    throw InvalidInput("dim must be 2 or 3");
}

}  // namespace

Json to_json(const LinkSpec& link) {
    Json comps = Json::array();
    for (const auto& c : link.components)
        comps.push_back({{"direction", c.direction}, {"label", c.label}, {"offsetSeed", c.offset_seed}});
    return {{"dim", link.dim}, {"components", comps}};
}

LinkSpec link_from_json(const Json& j) {
    LinkSpec link;
    link.dim = field<int>(j, "dim");
    for (const auto& c : member(j, "components")) {
        LinkComponent comp;
        comp.direction = field<std::vector<int64_t>>(c, "direction");
        comp.label = c.contains("label") ? field<std::string>(c, "label") : direction_label(comp.direction);
        comp.offset_seed = c.contains("offsetSeed") ? field<int>(c, "offsetSeed") : 0;
        if (static_cast<int>(comp.direction.size()) != link.dim)
            throw InvalidInput("component " + comp.label + " has the wrong dimension");
        link.components.push_back(std::move(comp));
    }
    return link;
}

Json to_json(const LinkingMatrix& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.entries.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.entries.cols(); ++c) row.push_back(integer_json(m.entries(r, c)));
        rows.push_back(std::move(row));
    }
    return {{"k", m.k}, {"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

LinkingMatrix matrix_from_json(const Json& j) {
    LinkingMatrix m;
    m.k = field<int>(j, "k");
    m.rows = field<std::vector<std::string>>(j, "rows");
    m.cols = field<std::vector<std::string>>(j, "cols");
    const Json& e = member(j, "entries");
    if (!e.is_array() || e.size() != m.rows.size()) throw InvalidInput("entries do not match the row labels");
    m.entries = IntMatrix(m.rows.size(), m.cols.size());
    for (size_t r = 0; r < m.rows.size(); ++r) {
        if (!e[r].is_array() || e[r].size() != m.cols.size()) throw InvalidInput("entries do not match the column labels");
        for (size_t c = 0; c < m.cols.size(); ++c) m.entries(r, c) = integer_from(e[r][c]);
    }
    return m;
}

Json to_json(const Certificate& c) {
    Json degrees = Json::array();
    Json matrices = Json::object();
    for (const auto& d : c.degrees) {
        Json rec = {{"j", d.j},
                    {"injective", d.injective},
                    {"matrixRef", d.matrix_ref},
                    {"bareissRank", d.injectivity.bareiss_rank},
                    {"smithRank", d.injectivity.smith_rank},
                    {"methodsAgree", d.methods_agree},
                    {"boundaryFiltrationOk", d.boundary_filtration_ok},
                    {"geometricChecked", d.geometric_checked},
                    {"geometricAgrees", d.geometric_agrees}};
        if (!d.witness.empty()) rec["witness"] = d.witness;
        degrees.push_back(std::move(rec));
        matrices[d.matrix_ref] = to_json(d.matrix);
    }
    return {{"m", c.m},           {"dim", c.dim},         {"link", to_json(c.link)},
            {"degrees", degrees}, {"verdict", c.verdict}, {"lemmaChain", c.lemma_chain},
            {"log", c.log},       {"matrices", matrices}};
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.m = field<int>(j, "m");
    c.dim = field<int>(j, "dim");
    c.link = link_from_json(member(j, "link"));
    c.verdict = field<bool>(j, "verdict");
    c.lemma_chain = field<std::vector<std::string>>(j, "lemmaChain");
    if (j.contains("log")) c.log = field<std::vector<std::string>>(j, "log");
    const Json matrices = j.contains("matrices") ? j.at("matrices") : Json::object();
    for (const auto& rec : member(j, "degrees")) {
        DegreeRecord d;
        d.j = field<int>(rec, "j");
        d.injective = field<bool>(rec, "injective");
        d.matrix_ref = field<std::string>(rec, "matrixRef");
        d.injectivity.injective = d.injective;
        if (rec.contains("bareissRank")) d.injectivity.bareiss_rank = field<size_t>(rec, "bareissRank");
        if (rec.contains("smithRank")) d.injectivity.smith_rank = field<size_t>(rec, "smithRank");
        if (rec.contains("methodsAgree")) d.methods_agree = field<bool>(rec, "methodsAgree");
        if (rec.contains("boundaryFiltrationOk")) d.boundary_filtration_ok = field<bool>(rec, "boundaryFiltrationOk");
        if (rec.contains("geometricChecked")) d.geometric_checked = field<bool>(rec, "geometricChecked");
        if (rec.contains("geometricAgrees")) d.geometric_agrees = field<bool>(rec, "geometricAgrees");
        if (rec.contains("witness")) d.witness = field<std::string>(rec, "witness");
        if (matrices.contains(d.matrix_ref)) d.matrix = matrix_from_json(matrices.at(d.matrix_ref));
        c.degrees.push_back(std::move(d));
    }
    return c;
}

Json to_json(const FingerMoveMap& f) {
    Json assignments = Json::array();
    for (size_t g = 0; g < f.assignments.size(); ++g) {
        Json values = Json::array();
        for (const auto& [label, p] : f.assignments[g].coords)
            if (!p.is_zero()) values.push_back({{"label", label}, {"poly", p.to_string()}});
        assignments.push_back({{"edge", edge_name(f.model, static_cast<int>(g))}, {"values", values}});
    }
    return {{"dim", group_rank(f.model)}, {"assignments", assignments}};
}

FingerMoveMap finger_map_from_json(const Json& j) {
    const int dim = field<int>(j, "dim");
    FingerMoveMap f = FingerMoveMap::zero(model_for_dim(dim));
    for (const auto& a : member(j, "assignments")) {
        const std::string edge = field<std::string>(a, "edge");
        int g = -1;
        for (int i = 0; i < edge_count(f.model); ++i)
            if (edge_name(f.model, i) == edge) g = i;
        if (g < 0) throw InvalidInput("unknown edge generator '" + edge + "'");
        for (const auto& v : member(a, "values")) {
            MeridianChain term{dim, {{field<std::string>(v, "label"), parse_laurent(field<std::string>(v, "poly"), dim)}}};
            f.assignments[g] += term;
        }
    }
    return f;
}

Json to_json(const FingerReplay& r) {
    return {{"k", r.k}, {"seed", r.seed}, {"link", to_json(r.link)}, {"map", to_json(r.map)}};
}

FingerReplay replay_from_json(const Json& j) {
    FingerReplay r;
    r.k = field<int>(j, "k");
    if (j.contains("seed")) r.seed = field<uint64_t>(j, "seed");
    r.link = link_from_json(member(j, "link"));
    r.map = finger_map_from_json(member(j, "map"));
    if (link_model(r.link) != r.map.model) throw InvalidInput("finger map and link have different dimensions");
    return r;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace fillcert
