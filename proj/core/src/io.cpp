#include "bullfree/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace bullfree {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

Vertex read_vertex(std::istringstream& ls, int n, int line) {
    long long v;
    if (!(ls >> v)) fail(line, "expected a vertex");
    if (v < 1 || v > n) fail(line, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(v - 1);
}

Weight read_weight(std::istringstream& ls, int line) {
    long long w;
    if (!(ls >> w)) fail(line, "expected an integer weight");
    if (w < 0) fail(line, "negative weight");
    return w;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    int n = -1;
    std::vector<PairValue> entries;
    std::map<VertexPair, int> kinds;
    std::vector<std::pair<Vertex, Weight>> vertex_weights;
    std::vector<std::pair<VertexPair, Weight>> pair_weights;
    std::map<Vertex, std::string> labels;
    std::optional<Weight> target;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::istringstream ls(raw);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") {
            std::string word;
            if (ls >> word && word == "label" && n >= 0) {
                Vertex v = read_vertex(ls, n, line);
                std::string name;
                if (!(ls >> name)) fail(line, "expected a label");
                labels[v] = name;
            }
            continue;
        }
        if (tag == "p") {
            if (n >= 0) fail(line, "duplicate header");
            std::string kind;
            long long count;
            if (!(ls >> kind >> count)) fail(line, "malformed header");
            if (kind != "tri" && kind != "edge" && kind != "col") fail(line, "unknown format '" + kind + "'");
            if (count < 0 || count > 1'000'000) fail(line, "bad vertex count");
            n = static_cast<int>(count);
            continue;
        }
        if (n < 0) fail(line, "data before header");
        if (tag == "e" || tag == "s") {
            Vertex u = read_vertex(ls, n, line);
            Vertex v = read_vertex(ls, n, line);
            if (u == v) fail(line, "self pair");
            int value = tag == "e" ? kStrongEdge : kSwitchable;
            auto [it, inserted] = kinds.emplace(ordered_pair(u, v), value);
            if (!inserted && it->second != value) fail(line, "pair listed as both edge and switchable");
            entries.push_back({u, v, value});
        } else if (tag == "w") {
            Vertex v = read_vertex(ls, n, line);
            vertex_weights.emplace_back(v, read_weight(ls, line));
        } else if (tag == "ws") {
            Vertex u = read_vertex(ls, n, line);
            Vertex v = read_vertex(ls, n, line);
            pair_weights.emplace_back(ordered_pair(u, v), read_weight(ls, line));
        } else if (tag == "k") {
            long long k;
            if (!(ls >> k) || k < 1) fail(line, "expected a positive target");
            target = k;
        } else {
            fail(line, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw InputError("missing 'p' header");

    Trigraph t = make_trigraph(n, entries);
    if (!labels.empty()) {
        std::vector<std::string> names(n);
        for (Vertex v = 0; v < n; ++v) names[v] = labels.count(v) ? labels[v] : std::to_string(v + 1);
        t.set_labels(std::move(names));
    }
    std::vector<Weight> ws(n, 1);
    for (auto [v, w] : vertex_weights) ws[v] = w;
    WeightedTrigraph wt(std::move(t), std::move(ws));
    for (auto [p, w] : pair_weights) {
        if (!wt.base().switchable(p.first, p.second))
            throw InputError("weight given for non-switchable pair " + std::to_string(p.first + 1) + " " +
                             std::to_string(p.second + 1));
        wt.set_pair_weight(p.first, p.second, w);
    }
    if (auto bad = wt.check_weights()) throw InputError(*bad);
    return Instance{std::move(wt), target};
}

Instance parse_instance_string(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance read_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return parse_instance(in);
}

void write_instance(std::ostream& out, const WeightedTrigraph& t, std::optional<Weight> target) {
    const Trigraph& b = t.base();
    out << "p tri " << b.size() << "\n";
    if (b.has_labels())
        for (Vertex v = 0; v < b.size(); ++v)
            if (b.label(v) != std::to_string(v + 1)) out << "c label " << v + 1 << " " << b.label(v) << "\n";
    if (target) out << "k " << *target << "\n";
    for (Vertex v = 0; v < b.size(); ++v) out << "w " << v + 1 << " " << t.weight(v) << "\n";
    for (auto [u, v] : b.strong_edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    for (auto [u, v] : b.switchable_pairs()) out << "s " << u + 1 << " " << v + 1 << "\n";
    for (auto [u, v] : b.switchable_pairs())
        out << "ws " << u + 1 << " " << v + 1 << " " << t.pair_weight(u, v) << "\n";
}

std::string to_text(const WeightedTrigraph& t, std::optional<Weight> target) {
    std::ostringstream out;
    write_instance(out, t, target);
    return out.str();
}

void write_instance_file(const std::filesystem::path& path, const WeightedTrigraph& t, std::optional<Weight> target) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    write_instance(out, t, target);
}

}  // namespace bullfree
