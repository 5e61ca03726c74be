#include "antimagic/io.hpp"

#include <sstream>

namespace antimagic {

using nlohmann::json;

namespace {

const json& require_key(const json& j, const char* key) {
    if (!j.is_object())
        throw ParseError(std::string("expected object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

int require_int(const json& j, const char* key) {
    const json& v = require_key(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("key \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::int64_t require_int64(const json& j, const char* key) {
    const json& v = require_key(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("key \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

VertexFamily family_from_string(const std::string& s) {
    if (s == "a") return VertexFamily::A;
    if (s == "b") return VertexFamily::B;
    if (s == "v") return VertexFamily::V;
    if (s == "u") return VertexFamily::U;
    throw ParseError("key \"family\" must be one of a|b|v|u");
}

} // namespace

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

json graph_to_json(const Graph& g) {
    json vertices = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        json jv{{"id", v}};
        if (const auto& role = g.role(v)) {
            json jr{{"family", std::string(1, family_letter(role->family))},
                    {"i", role->path_index}};
            if (role->has_branch()) jr["j"] = role->branch_index;
            jv["role"] = jr;
        }
        vertices.push_back(jv);
    }
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
    return json{{"vertices", vertices}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    const json& vertices = require_key(j, "vertices");
    if (!vertices.is_array()) throw ParseError("key \"vertices\" must be an array");
    const json& edges = require_key(j, "edges");
    if (!edges.is_array()) throw ParseError("key \"edges\" must be an array");

    const int n = static_cast<int>(vertices.size());
    std::vector<std::optional<VertexRole>> roles(static_cast<size_t>(n));
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (const json& jv : vertices) {
        int id = require_int(jv, "id");
        if (id < 0 || id >= n)
            throw ParseError("key \"id\" out of range in \"vertices\": " +
                             std::to_string(id));
        if (seen[static_cast<size_t>(id)])
            throw ParseError("duplicate vertex \"id\": " + std::to_string(id));
        seen[static_cast<size_t>(id)] = true;
        if (auto it = jv.find("role"); it != jv.end() && !it->is_null()) {
            VertexRole role{};
            const json& jr = *it;
            const json& fam = require_key(jr, "family");
            if (!fam.is_string())
                throw ParseError("key \"family\" must be a string");
            role.family = family_from_string(fam.get<std::string>());
            role.path_index = require_int(jr, "i");
            if (auto jt = jr.find("j"); jt != jr.end() && !jt->is_null()) {
                if (!jt->is_number_integer())
                    throw ParseError("key \"j\" must be an integer");
                role.branch_index = jt->get<int>();
            }
            roles[static_cast<size_t>(id)] = role;
        }
    }

    std::vector<std::pair<int, int>> endpoints(edges.size());
    std::vector<bool> eseen(edges.size(), false);
    for (const json& je : edges) {
        int id = require_int(je, "id");
        if (id < 0 || id >= static_cast<int>(edges.size()))
            throw ParseError("key \"id\" out of range in \"edges\": " +
                             std::to_string(id));
        if (eseen[static_cast<size_t>(id)])
            throw ParseError("duplicate edge \"id\": " + std::to_string(id));
        eseen[static_cast<size_t>(id)] = true;
        endpoints[static_cast<size_t>(id)] = {require_int(je, "u"),
                                              require_int(je, "v")};
    }
    try {
        return Graph::from_edges(n, endpoints, std::move(roles));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

json labeling_to_json(const EdgeLabeling& l, const std::string& graph_ref) {
    json labels = json::array();
    for (int id = 0; id < l.size(); ++id)
        labels.push_back({{"edge", id}, {"label", l.label(id)}});
    json out{{"labels", labels}};
    if (!graph_ref.empty()) out["graph_ref"] = graph_ref;
    return out;
}

EdgeLabeling labeling_from_json(const json& j, const Graph& g) {
    const json& labels = require_key(j, "labels");
    if (!labels.is_array()) throw ParseError("key \"labels\" must be an array");

    const int e = g.edge_count();
    EdgeLabeling out;
    out.labels.assign(static_cast<size_t>(e), 0);
    std::vector<bool> seen(static_cast<size_t>(e), false);
    for (const json& jl : labels) {
        int edge = require_int(jl, "edge");
        if (edge < 0 || edge >= e)
            throw ParseError("key \"edge\" names an id outside the graph: " +
                             std::to_string(edge));
        if (seen[static_cast<size_t>(edge)])
            throw ParseError("duplicate key \"edge\": " + std::to_string(edge));
        seen[static_cast<size_t>(edge)] = true;
        std::int64_t label = require_int64(jl, "label");
        if (label < 1)
            throw ParseError("key \"label\" must be a positive integer, got " +
                             std::to_string(label));
        out.labels[static_cast<size_t>(edge)] = label;
    }
    for (int id = 0; id < e; ++id)
        if (!seen[static_cast<size_t>(id)])
            throw ParseError("key \"labels\" misses edge id " +
                             std::to_string(id));
    return out;
}

json certificate_to_json(const NonAntimagicCertificate& c) {
    return json{{"graph_fingerprint", c.graph_fingerprint},
                {"assignments_examined", c.assignments_examined},
                {"exhaustive", c.exhaustive}};
}

json outcome_to_json(const ConstructionOutcome& o) {
    json out;
    switch (o.kind) {
        case ConstructionOutcome::Kind::Antimagic:
            out["verdict"] = "antimagic";
            out["method"] = method_tag_name(*o.method);
            out["epsilon"] = o.epsilon ? json(*o.epsilon) : json(nullptr);
            break;
        case ConstructionOutcome::Kind::NotAntimagic:
            out["verdict"] = "not-antimagic";
            out["certificate"] = certificate_to_json(*o.certificate);
            break;
        case ConstructionOutcome::Kind::Unknown:
            out["verdict"] = "unknown";
            out["budget_report"] = {
                {"nodes_expanded", o.budget_report->nodes_expanded},
                {"assignments_examined", o.budget_report->assignments_examined},
                {"budget_exhausted", o.budget_report->budget_exhausted}};
            break;
    }
    return out;
}

std::string to_dot(const Graph& g, const EdgeLabeling& l,
                   const std::string& name) {
    const WeightMap wm = vertex_weights(g, l);
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"";
        if (const auto& role = g.role(v))
            out << role->to_string();
        else
            out << v;
        out << ":" << wm.weight(v) << "\"];\n";
    }
    for (const Edge& e : g.edges())
        out << "  " << e.u << " -- " << e.v << " [label=" << l.label(e.id)
            << "];\n";
    out << "}\n";
    return out.str();
}

std::string labeled_csv(const Graph& g, const EdgeLabeling& l) {
    std::ostringstream out;
    out << "edge,u,v,label\n";
    for (const Edge& e : g.edges())
        out << e.id << "," << e.u << "," << e.v << "," << l.label(e.id) << "\n";
    return out.str();
}

} // namespace antimagic
