#include "report.hpp"

#include <bullfree/io.hpp>

#include <sstream>
#include <stdexcept>

namespace bullkit {

using namespace bullfree;

json vertices_json(const std::vector<Vertex>& vs) {
    json out = json::array();
    for (Vertex v : vs) out.push_back(v + 1);
    return out;
}

namespace {

json labels_json(const WeightedTrigraph& t) {
    json out = json::array();
    for (Vertex v = 0; v < t.size(); ++v) out.push_back(t.base().label(v));
    return out;
}

json split_json(const Split& s) {
    return {{"A", vertices_json(s.a)}, {"B", vertices_json(s.b)}, {"C", vertices_json(s.c)},
            {"D", vertices_json(s.d)}, {"E", vertices_json(s.e)}, {"F", vertices_json(s.f)}};
}

json level_json(const LevelRecord& lv, std::size_t index) {
    json node;
    node["level"] = index;
    node["n"] = lv.t.size();
    node["labels"] = labels_json(lv.t);
    std::vector<Vertex> dropped;
    {
        std::vector<char> kept(static_cast<std::size_t>(lv.input.size()), 0);
        for (Vertex v : lv.kept) kept[static_cast<std::size_t>(v)] = 1;
        for (Vertex v = 0; v < lv.input.size(); ++v)
            if (!kept[static_cast<std::size_t>(v)]) dropped.push_back(v);
    }
    node["preprocess_dropped"] = vertices_json(dropped);
    if (!lv.cut) {
        node["kind"] = "leaf";
        if (lv.leaf_outcome) node["leaf_outcome"] = to_string(*lv.leaf_outcome);
        node["trigraph"] = to_text(lv.t);
        return node;
    }
    const Cut& cut = *lv.cut;
    node["kind"] = to_string(cut.kind);
    node["X"] = vertices_json(cut.x);
    node["Y"] = vertices_json(cut.y);
    if (cut.split) node["split"] = split_json(*cut.split);
    if (lv.x_outcome) node["x_outcome"] = to_string(*lv.x_outcome);
    if (cut.kind == CutKind::HomogeneousSet) {
        node["alpha"] = {{"X", lv.alphas.x}};
    } else {
        node["alpha"] = {{"A", lv.alphas.a}, {"B", lv.alphas.b}, {"AB", lv.alphas.ab}};
    }
    if (lv.y) {
        json markers = json::array();
        for (const Marker& m : lv.y->markers)
            markers.push_back({{"role", to_string(m.role)},
                               {"vertex", m.vertex + 1},
                               {"label", lv.y->trigraph.base().label(m.vertex)},
                               {"summarizes", vertices_json(m.summarizes)}});
        node["markers"] = markers;
    }
    return node;
}

}  // namespace

json tree_json(const SolveResult& r) {
    json levels = json::array();
    for (std::size_t i = 0; i < r.path.levels.size(); ++i) levels.push_back(level_json(r.path.levels[i], i));
    return {{"levels", levels}, {"result", verdict_json(r)}};
}

json verdict_json(const SolveResult& r) {
    json j;
    if (r.verdict == SolveResult::Verdict::YesAtLeastW) {
        j["verdict"] = "YES";
        j["reason"] = r.reason;
    } else {
        j["verdict"] = "ALPHA";
        j["alpha"] = r.weight;
    }
    if (r.witness) {
        j["witness"] = vertices_json(*r.witness);
        j["witness_weight"] = r.weight;
    }
    return j;
}

std::string verdict_text(const SolveResult& r) {
    std::ostringstream out;
    if (r.verdict == SolveResult::Verdict::YesAtLeastW)
        out << "YES\n";
    else
        out << "ALPHA " << r.weight << '\n';
    if (r.witness) {
        out << "WITNESS";
        for (Vertex v : *r.witness) out << ' ' << v + 1;
        out << '\n';
    }
    return out.str();
}

const char* role_name(AlphaRequest::Role r) {
    switch (r) {
        case AlphaRequest::Role::Leaf: return "leaf";
        case AlphaRequest::Role::X: return "X";
        case AlphaRequest::Role::A: return "A";
        case AlphaRequest::Role::B: return "B";
        case AlphaRequest::Role::AB: return "AB";
    }
    return "?";
}

json transcript_json(const KernelTranscript& tr, const std::vector<std::string>& files) {
    json queries = json::array();
    for (std::size_t i = 0; i < tr.queries.size(); ++i) {
        const QueryRecord& q = tr.queries[i];
        json e = {{"id", q.query.id},
                  {"role", role_name(q.query.role)},
                  {"target", q.query.target},
                  {"trigraph_n", q.query.trigraph.size()},
                  {"graph_n", q.query.graph ? json(q.query.graph->size()) : json(nullptr)},
                  {"answer", q.answer}};
        if (i < files.size() && !files[i].empty()) e["file"] = files[i];
        queries.push_back(std::move(e));
    }
    return {{"k", tr.k}, {"queries", queries}, {"result", verdict_json(tr.final)}};
}

std::vector<bool> answers_from_json(const json& j) {
    std::vector<bool> out;
    if (j.contains("answers")) {
        for (const auto& a : j.at("answers")) out.push_back(a.get<bool>());
    } else if (j.contains("queries")) {
        for (const auto& q : j.at("queries")) out.push_back(q.at("answer").get<bool>());
    } else {
        throw std::invalid_argument("answers file needs an \"answers\" or \"queries\" array");
    }
    return out;
}

json coloring_json(const ColorAssignment& c) {
    json colours = json::array();
    for (int x : c.colour) colours.push_back(x);
    return {{"palette", c.palette}, {"colour", colours}};
}

}  // namespace bullkit
