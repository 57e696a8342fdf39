#include "bullfree/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bullfree/decomposition.hpp"

namespace bullfree {

namespace {

int count_palette(const std::vector<int>& c) { return static_cast<int>(std::set<int>(c.begin(), c.end()).size()); }

void require_graph(const Trigraph& g) {
    if (!g.is_graph()) throw InputError("colouring needs a graph (no switchable pairs)");
    if (auto b = find_bull(g)) throw NotInClass("graph contains a bull");
}

std::vector<std::vector<Vertex>> components(const Trigraph& g) {
    std::vector<int> comp(g.size(), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<Vertex> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            const VertexSet& nb = g.strong_neighbors(members[i]);
            for (Vertex v = nb.first(); v >= 0; v = nb.next(v))
                if (comp[v] < 0) {
                    comp[v] = comp[s];
                    members.push_back(v);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<int> semicolor_connected(const Trigraph& g) {
    const int n = g.size();
    if (n <= 1) return std::vector<int>(n, 0);
    auto cut = find_min_cut(g);
    if (!cut) return greedy_coloring(g).colour;

    std::vector<int> colour(n, -1);
    if (cut->kind == CutKind::HomogeneousSet) {
        // X takes the colour of its representative.
        const Vertex rep = cut->x.front();
        std::vector<Vertex> keep = cut->y;
        keep.insert(std::lower_bound(keep.begin(), keep.end(), rep), rep);
        auto sub = semicolor_connected(induce(g, keep));
        for (std::size_t i = 0; i < keep.size(); ++i) colour[keep[i]] = sub[i];
        for (Vertex v : cut->x) colour[v] = colour[rep];
        return colour;
    }

    Split s = *cut->split;
    if (s.proper() || !s.e.empty()) {
        // G_Y: Y plus a (complete to C u E) and b (complete to D u E), ab an edge.
        Trigraph h = induce(g, cut->y);
        Vertex a = h.add_vertex(), b = h.add_vertex();
        for (std::size_t i = 0; i < cut->y.size(); ++i) {
            Vertex v = cut->y[i];
            bool in_c = std::binary_search(s.c.begin(), s.c.end(), v);
            bool in_d = std::binary_search(s.d.begin(), s.d.end(), v);
            bool in_e = std::binary_search(s.e.begin(), s.e.end(), v);
            if (in_c || in_e) h.set(a, static_cast<Vertex>(i), kStrongEdge);
            if (in_d || in_e) h.set(b, static_cast<Vertex>(i), kStrongEdge);
        }
        h.set(a, b, kStrongEdge);
        auto sub = semicolor_connected(h);
        for (std::size_t i = 0; i < cut->y.size(); ++i) colour[cut->y[i]] = sub[i];
        if (s.e.empty()) {
            // a and b lie in a maximal clique {a, b}, so their colours differ.
            for (Vertex v : s.a) colour[v] = sub[a];
            for (Vertex v : s.b) colour[v] = sub[b];
            return colour;
        }
        // With E nonempty a clique of A plus E vertices can be maximal in G
        // while {a} plus those E vertices is not maximal in G_Y, so the marker
        // colours are not safe. A u B gets a proper colouring in colours
        // unused on Y instead.
        int top = 0;
        for (std::size_t i = 0; i < cut->y.size(); ++i) top = std::max(top, sub[i] + 1);
        auto inner = greedy_coloring(induce(g, cut->x)).colour;
        for (std::size_t i = 0; i < cut->x.size(); ++i) colour[cut->x[i]] = top + inner[i];
        return colour;
    }

    // Small pair, not proper, E empty: arrange C empty, so A only sees B.
    if (!s.c.empty()) {
        std::swap(s.a, s.b);
        std::swap(s.c, s.d);
    }
    const Vertex rep = s.b.front();
    std::vector<Vertex> keep = cut->y;
    keep.insert(std::lower_bound(keep.begin(), keep.end(), rep), rep);
    auto sub = semicolor_connected(induce(g, keep));
    for (std::size_t i = 0; i < keep.size(); ++i) colour[keep[i]] = sub[i];
    for (Vertex v : s.b) colour[v] = colour[rep];
    std::set<int> used(sub.begin(), sub.end());
    int next = 0;
    for (Vertex v : s.a) {
        while (used.count(next)) ++next;
        colour[v] = next++;
    }
    return colour;
}

}  // namespace

ColorAssignment greedy_coloring(const Trigraph& g) {
    const int n = g.size();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return g.strong_neighbors(a).count() > g.strong_neighbors(b).count();
    });
    ColorAssignment out;
    out.colour.assign(n, -1);
    for (Vertex v : order) {
        std::vector<char> taken(n + 1, 0);
        const VertexSet& nb = g.strong_neighbors(v);
        for (Vertex u = nb.first(); u >= 0; u = nb.next(u))
            if (out.colour[u] >= 0) taken[out.colour[u]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        out.colour[v] = c;
    }
    out.palette = count_palette(out.colour);
    return out;
}

bool is_proper_coloring(const Trigraph& g, const std::vector<int>& colour) {
    if (static_cast<int>(colour.size()) != g.size()) return false;
    for (Vertex u = 0; u < g.size(); ++u) {
        const VertexSet& nb = g.strong_neighbors(u);
        for (Vertex v = nb.next(u); v >= 0; v = nb.next(v))
            if (colour[u] == colour[v]) return false;
    }
    return true;
}

ColorAssignment semicolor(const Trigraph& g) {
    require_graph(g);
    ColorAssignment out;
    out.colour.assign(g.size(), 0);
    for (const auto& comp : components(g)) {
        auto sub = semicolor_connected(induce(g, comp));
        for (std::size_t i = 0; i < comp.size(); ++i) out.colour[comp[i]] = sub[i];
    }
    out.palette = count_palette(out.colour);
    return out;
}

namespace {

int max_clique_from(const Trigraph& g, VertexSet p, int size, int best) {
    if (p.empty()) return std::max(best, size);
    if (size + p.count() <= best) return best;
    for (Vertex v = p.first(); v >= 0; v = p.next(v)) {
        if (size + p.count() <= best) break;
        best = max_clique_from(g, p & g.strong_neighbors(v), size + 1, best);
        p.erase(v);
    }
    return best;
}

}  // namespace

int clique_number(const Trigraph& g) {
    if (g.size() == 0) return 0;
    return max_clique_from(g, VertexSet::full(g.size()), 0, 0);
}

ColorAssignment chi_color(const Trigraph& g, int* levels) {
    require_graph(g);
    const int n = g.size();
    // classes keyed by their colour history, split until triangle-free
    std::map<std::vector<int>, std::vector<Vertex>> classes;
    classes[{}] = [&] {
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }();
    int rounds = 0;
    while (true) {
        bool split = false;
        std::map<std::vector<int>, std::vector<Vertex>> next;
        for (auto& [k, members] : classes) {
            Trigraph sub = induce(g, members);
            if (clique_number(sub) <= 2) {
                next[k] = members;
                continue;
            }
            split = true;
            auto sc = semicolor(sub);
            for (std::size_t i = 0; i < members.size(); ++i) {
                auto nk = k;
                nk.push_back(sc.colour[i]);
                next[nk].push_back(members[i]);
            }
        }
        classes = std::move(next);
        if (!split) break;
        ++rounds;
    }
    ColorAssignment out;
    out.colour.assign(n, -1);
    int base = 0;
    for (auto& [k, members] : classes) {
        auto gc = greedy_coloring(induce(g, members));
        int top = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            out.colour[members[i]] = base + gc.colour[i];
            top = std::max(top, gc.colour[i] + 1);
        }
        base += top;
    }
    out.palette = count_palette(out.colour);
    if (levels) *levels = rounds;
    return out;
}

}  // namespace bullfree
