#include "bullfree/trigraph.hpp"

#include <algorithm>
#include <sstream>

namespace bullfree {

Trigraph::Trigraph(int n)
    : n_(n),
      theta_(static_cast<std::size_t>(n) * n, static_cast<std::int8_t>(kStrongAntiedge)),
      strong_(n, VertexSet(n)),
      switch_(n, VertexSet(n)) {
    if (n < 0) throw InputError("negative vertex count");
}

void Trigraph::set(Vertex u, Vertex v, int value) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("vertex out of range");
    if (u == v) throw InputError("self pair");
    if (value < -1 || value > 1) throw InputError("adjacency value out of range");
    theta_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(value);
    theta_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::int8_t>(value);
    strong_[u].erase(v);
    strong_[v].erase(u);
    switch_[u].erase(v);
    switch_[v].erase(u);
    if (value == kStrongEdge) {
        strong_[u].insert(v);
        strong_[v].insert(u);
    } else if (value == kSwitchable) {
        switch_[u].insert(v);
        switch_[v].insert(u);
    }
}

VertexSet Trigraph::strong_antineighbors(Vertex v) const {
    VertexSet s = (strong_[v] | switch_[v]).complement();
    s.erase(v);
    return s;
}

VertexSet Trigraph::antineighbors(Vertex v) const {
    VertexSet s = strong_[v].complement();
    s.erase(v);
    return s;
}

std::vector<VertexPair> Trigraph::switchable_pairs() const {
    std::vector<VertexPair> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = switch_[u].next(u); v >= 0; v = switch_[u].next(v)) out.emplace_back(u, v);
    return out;
}

std::vector<VertexPair> Trigraph::strong_edges() const {
    std::vector<VertexPair> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = strong_[u].next(u); v >= 0; v = strong_[u].next(v)) out.emplace_back(u, v);
    return out;
}

bool Trigraph::is_graph() const {
    for (const auto& s : switch_)
        if (!s.empty()) return false;
    return true;
}

std::string Trigraph::label(Vertex v) const {
    if (static_cast<std::size_t>(v) < labels_.size()) return labels_[v];
    return std::to_string(v + 1);
}

void Trigraph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_) throw InputError("label count mismatch");
    labels_ = std::move(labels);
}

Vertex Trigraph::add_vertex(std::string label) {
    Trigraph bigger(n_ + 1);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (theta(u, v) != kStrongAntiedge) bigger.set(u, v, theta(u, v));
    if (!labels_.empty()) {
        bigger.labels_ = labels_;
        bigger.labels_.push_back(label.empty() ? std::to_string(n_ + 1) : std::move(label));
    }
    *this = std::move(bigger);
    return n_ - 1;
}

std::optional<Violation> validate(int n, std::span<const PairValue> entries) {
    std::map<VertexPair, int> seen;
    for (const auto& e : entries) {
        std::ostringstream msg;
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            msg << "vertex out of range in pair (" << e.u + 1 << "," << e.v + 1 << ")";
            return Violation{Violation::Kind::VertexOutOfRange, e.u, e.v, msg.str()};
        }
        if (e.u == e.v) {
            msg << "self pair at vertex " << e.u + 1;
            return Violation{Violation::Kind::SelfPair, e.u, e.v, msg.str()};
        }
        if (e.value < -1 || e.value > 1) {
            msg << "value " << e.value << " out of range on pair (" << e.u + 1 << "," << e.v + 1 << ")";
            return Violation{Violation::Kind::OutOfRange, e.u, e.v, msg.str()};
        }
        auto [it, inserted] = seen.emplace(ordered_pair(e.u, e.v), e.value);
        if (!inserted && it->second != e.value) {
            msg << "asymmetric pair (" << e.u + 1 << "," << e.v + 1 << "): " << it->second << " vs " << e.value;
            return Violation{Violation::Kind::Asymmetric, e.u, e.v, msg.str()};
        }
    }
    return std::nullopt;
}

std::optional<Violation> validate(const Trigraph& t) {
    for (Vertex u = 0; u < t.size(); ++u)
        for (Vertex v = 0; v < t.size(); ++v) {
            if (u == v) continue;
            int a = t.theta(u, v);
            if (a < -1 || a > 1) return Violation{Violation::Kind::OutOfRange, u, v, "value out of range"};
            if (a != t.theta(v, u)) return Violation{Violation::Kind::Asymmetric, u, v, "asymmetric"};
        }
    return std::nullopt;
}

Trigraph make_trigraph(int n, std::span<const PairValue> entries) {
    if (auto bad = validate(n, entries)) throw InputError(bad->message);
    Trigraph t(n);
    for (const auto& e : entries) t.set(e.u, e.v, e.value);
    return t;
}

Trigraph make_graph(int n, std::span<const VertexPair> edges) {
    Trigraph t(n);
    for (auto [u, v] : edges) t.set(u, v, kStrongEdge);
    return t;
}

std::optional<Vertex> polygamous_vertex(const Trigraph& t) {
    for (Vertex v = 0; v < t.size(); ++v)
        if (t.switchable_neighbors(v).count() > 1) return v;
    return std::nullopt;
}

bool is_monogamous(const Trigraph& t) { return !polygamous_vertex(t).has_value(); }

Trigraph complement(const Trigraph& t) {
    Trigraph c(t.size());
    for (Vertex u = 0; u < t.size(); ++u)
        for (Vertex v = u + 1; v < t.size(); ++v) c.set(u, v, -t.theta(u, v));
    if (t.has_labels()) c.set_labels(t.labels());
    return c;
}

Trigraph induce(const Trigraph& t, std::span<const Vertex> vs) {
    const int m = static_cast<int>(vs.size());
    Trigraph r(m);
    for (int i = 0; i < m; ++i) {
        if (vs[i] < 0 || vs[i] >= t.size()) throw InputError("vertex out of range");
        for (int j = i + 1; j < m; ++j) {
            if (vs[i] == vs[j]) throw InputError("repeated vertex in induce");
            int a = t.theta(vs[i], vs[j]);
            if (a != kStrongAntiedge) r.set(i, j, a);
        }
    }
    if (t.has_labels()) {
        std::vector<std::string> labels;
        labels.reserve(m);
        for (Vertex v : vs) labels.push_back(t.label(v));
        r.set_labels(std::move(labels));
    }
    return r;
}

Trigraph induce(const Trigraph& t, const VertexSet& x) {
    auto vs = x.to_vector();
    return induce(t, vs);
}

bool is_bull(const Trigraph& t, const BullWitness& w) {
    auto vs = w.vertices();
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (vs[i] == vs[j]) return false;
    return t.adjacent(w.x1, w.x2) && t.adjacent(w.x1, w.x3) && t.adjacent(w.x2, w.x3) && t.adjacent(w.y, w.x1) &&
           t.antiadjacent(w.y, w.x2) && t.antiadjacent(w.y, w.x3) && t.antiadjacent(w.y, w.z) &&
           t.adjacent(w.z, w.x2) && t.antiadjacent(w.z, w.x1) && t.antiadjacent(w.z, w.x3);
}

namespace {

// Completes a bull on triangle (x1, x2, x3) with y hanging on x1, z on x2.
std::optional<BullWitness> complete_bull(const Trigraph& t, const std::vector<VertexSet>& adj,
                                         const std::vector<VertexSet>& anti, Vertex x1, Vertex x2, Vertex x3) {
    VertexSet ys = adj[x1] & anti[x2] & anti[x3];
    if (ys.empty()) return std::nullopt;
    VertexSet zs = adj[x2] & anti[x1] & anti[x3];
    if (zs.empty()) return std::nullopt;
    for (Vertex y = ys.first(); y >= 0; y = ys.next(y)) {
        VertexSet cand = zs & anti[y];
        cand.erase(y);
        if (!cand.empty()) return BullWitness{x1, x2, x3, y, cand.first()};
    }
    (void)t;
    return std::nullopt;
}

struct AdjacencyViews {
    std::vector<VertexSet> adj;
    std::vector<VertexSet> anti;
    explicit AdjacencyViews(const Trigraph& t) {
        adj.reserve(t.size());
        anti.reserve(t.size());
        for (Vertex v = 0; v < t.size(); ++v) {
            adj.push_back(t.neighbors(v));
            anti.push_back(t.antineighbors(v));
        }
    }
};

}  // namespace

std::optional<BullWitness> find_bull(const Trigraph& t) {
    if (t.size() < 5) return std::nullopt;
    AdjacencyViews views(t);
    // Roles x1 and x2 are interchangeable together with y and z, so x1 < x2.
    for (Vertex x1 = 0; x1 < t.size(); ++x1) {
        for (Vertex x2 = views.adj[x1].next(x1); x2 >= 0; x2 = views.adj[x1].next(x2)) {
            VertexSet thirds = views.adj[x1] & views.adj[x2];
            for (Vertex x3 = thirds.first(); x3 >= 0; x3 = thirds.next(x3))
                if (auto w = complete_bull(t, views.adj, views.anti, x1, x2, x3)) return w;
        }
    }
    return std::nullopt;
}

std::optional<BullWitness> find_bull_through(const Trigraph& t, Vertex v) {
    if (t.size() < 5) return std::nullopt;
    AdjacencyViews views(t);
    for (Vertex x1 = 0; x1 < t.size(); ++x1) {
        for (Vertex x2 = views.adj[x1].next(x1); x2 >= 0; x2 = views.adj[x1].next(x2)) {
            VertexSet thirds = views.adj[x1] & views.adj[x2];
            for (Vertex x3 = thirds.first(); x3 >= 0; x3 = thirds.next(x3)) {
                if (x1 == v || x2 == v || x3 == v) {
                    if (auto w = complete_bull(t, views.adj, views.anti, x1, x2, x3)) return w;
                    continue;
                }
                // v must play y or z.
                if (views.adj[x1].contains(v) && views.anti[x2].contains(v) && views.anti[x3].contains(v)) {
                    VertexSet zs = views.adj[x2] & views.anti[x1] & views.anti[x3] & views.anti[v];
                    zs.erase(v);
                    if (!zs.empty()) return BullWitness{x1, x2, x3, v, zs.first()};
                }
                if (views.adj[x2].contains(v) && views.anti[x1].contains(v) && views.anti[x3].contains(v)) {
                    VertexSet ys = views.adj[x1] & views.anti[x2] & views.anti[x3] & views.anti[v];
                    ys.erase(v);
                    if (!ys.empty()) return BullWitness{x1, x2, x3, ys.first(), v};
                }
            }
        }
    }
    return std::nullopt;
}

Trigraph realization(const Trigraph& t, std::span<const VertexPair> as_edges) {
    Trigraph r = t;
    for (auto [u, v] : as_edges)
        if (!t.switchable(u, v)) throw InputError("realization: pair is not switchable");
    for (auto [u, v] : t.switchable_pairs()) r.set(u, v, kStrongAntiedge);
    for (auto [u, v] : as_edges) r.set(u, v, kStrongEdge);
    return r;
}

Trigraph full_realization(const Trigraph& t) {
    auto pairs = t.switchable_pairs();
    return realization(t, pairs);
}

Trigraph antiedge_realization(const Trigraph& t) { return realization(t, {}); }

bool is_stable(const Trigraph& t, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !t.antiadjacent(s[i], s[j])) return false;
    return true;
}

bool is_strong_clique(const Trigraph& t, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !t.strongly_adjacent(s[i], s[j])) return false;
    return true;
}

Weight checked_add(Weight a, Weight b) {
    Weight r;
    if (__builtin_add_overflow(a, b, &r)) throw WeightOverflow("weight overflow");
    return r;
}

Weight default_pair_weight(Weight wu, Weight wv) {
    Weight w = std::max(wu, wv);
    if (wu >= 1 && wv >= 1) w = std::max<Weight>(w, 2);
    return w;
}

WeightedTrigraph::WeightedTrigraph(Trigraph t) : WeightedTrigraph(std::move(t), {}) {}

WeightedTrigraph::WeightedTrigraph(Trigraph t, std::vector<Weight> vertex_weights)
    : base_(std::move(t)), vertex_weight_(std::move(vertex_weights)) {
    if (vertex_weight_.empty()) vertex_weight_.assign(base_.size(), 1);
    if (static_cast<int>(vertex_weight_.size()) != base_.size()) throw InputError("weight vector size mismatch");
    for (auto [u, v] : base_.switchable_pairs())
        pair_weight_[{u, v}] = default_pair_weight(vertex_weight_[u], vertex_weight_[v]);
}

void WeightedTrigraph::set_weight(Vertex v, Weight w) {
    if (w < 0) throw InputError("negative vertex weight");
    vertex_weight_.at(v) = w;
}

Weight WeightedTrigraph::pair_weight(Vertex u, Vertex v) const {
    auto it = pair_weight_.find(ordered_pair(u, v));
    if (it == pair_weight_.end()) throw InputError("pair_weight: not a switchable pair");
    return it->second;
}

void WeightedTrigraph::set_pair_weight(Vertex u, Vertex v, Weight w) {
    if (!base_.switchable(u, v)) throw InputError("set_pair_weight: not a switchable pair");
    if (w < 0) throw InputError("negative pair weight");
    pair_weight_[ordered_pair(u, v)] = w;
}

void WeightedTrigraph::set_theta(Vertex u, Vertex v, int value, Weight pair_w) {
    base_.set(u, v, value);
    if (value == kSwitchable)
        pair_weight_[ordered_pair(u, v)] = pair_w;
    else
        pair_weight_.erase(ordered_pair(u, v));
}

Vertex WeightedTrigraph::add_vertex(Weight w, std::string label) {
    if (w < 0) throw InputError("negative vertex weight");
    Vertex v = base_.add_vertex(std::move(label));
    vertex_weight_.push_back(w);
    return v;
}

std::optional<std::string> WeightedTrigraph::check_weights() const {
    for (Vertex v = 0; v < size(); ++v)
        if (vertex_weight_[v] < 0) return "negative weight on vertex " + std::to_string(v + 1);
    for (auto [u, v] : base_.switchable_pairs()) {
        auto it = pair_weight_.find({u, v});
        if (it == pair_weight_.end())
            return "missing weight on pair " + std::to_string(u + 1) + "," + std::to_string(v + 1);
        Weight wu = vertex_weight_[u], wv = vertex_weight_[v], w = it->second;
        if (w < std::max(wu, wv) || w > checked_add(wu, wv))
            return "pair " + std::to_string(u + 1) + "," + std::to_string(v + 1) + " weight " + std::to_string(w) +
                   " outside [" + std::to_string(std::max(wu, wv)) + "," + std::to_string(wu + wv) + "]";
    }
    if (pair_weight_.size() != base_.switchable_pairs().size()) return "pair weight on a non-switchable pair";
    return std::nullopt;
}

Weight WeightedTrigraph::total_weight() const {
    Weight s = 0;
    for (Weight w : vertex_weight_) s = checked_add(s, w);
    return s;
}

WeightedTrigraph induce(const WeightedTrigraph& t, std::span<const Vertex> vs) {
    std::vector<Weight> ws;
    ws.reserve(vs.size());
    for (Vertex v : vs) ws.push_back(t.weight(v));
    WeightedTrigraph r(induce(t.base(), vs), std::move(ws));
    for (auto [i, j] : r.base().switchable_pairs()) r.set_pair_weight(i, j, t.pair_weight(vs[i], vs[j]));
    return r;
}

WeightedTrigraph induce(const WeightedTrigraph& t, const VertexSet& x) {
    auto vs = x.to_vector();
    return induce(t, vs);
}

Weight stable_set_weight(const WeightedTrigraph& t, std::span<const Vertex> s) {
    const Trigraph& b = t.base();
    if (!is_stable(b, s)) throw InputError("stable_set_weight: set is not stable");
    if (!is_monogamous(b)) throw InputError("stable_set_weight: trigraph is not monogamous");
    Weight total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool core = true;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (i == j) continue;
            if (b.switchable(s[i], s[j])) {
                core = false;
                if (s[i] < s[j]) total = checked_add(total, t.pair_weight(s[i], s[j]));
            }
        }
        if (core) total = checked_add(total, t.weight(s[i]));
    }
    return total;
}

const char* to_string(EliminationMode m) {
    switch (m) {
        case EliminationMode::ATowardsStable: return "a->S";
        case EliminationMode::BTowardsStable: return "b->S";
        case EliminationMode::ATowardsClique: return "a->K";
        case EliminationMode::BTowardsClique: return "b->K";
    }
    return "?";
}

WeightedTrigraph eliminate_switchable(const WeightedTrigraph& t, Vertex a, Vertex b, EliminationMode mode) {
    if (!t.base().switchable(a, b)) throw InputError("eliminate_switchable: pair is not switchable");
    const Weight wab = t.pair_weight(a, b);
    const bool on_a = mode == EliminationMode::ATowardsStable || mode == EliminationMode::ATowardsClique;
    const bool clique = mode == EliminationMode::ATowardsClique || mode == EliminationMode::BTowardsClique;
    const Vertex u = on_a ? a : b;  // the vertex being cloned
    const Vertex other = on_a ? b : a;
    const Weight wu = t.weight(u), wother = t.weight(other);

    VertexSet attach = t.base().neighbors(u);
    attach.erase(other);

    WeightedTrigraph r = t;
    r.set_theta(a, b, kStrongEdge);
    std::string label = t.base().has_labels() ? t.base().label(u) + "'" : std::string{};
    const Vertex clone = r.add_vertex(wab - wother, std::move(label));
    for (Vertex v = attach.first(); v >= 0; v = attach.next(v)) r.set_theta(clone, v, kStrongEdge);
    if (clique)
        r.set_theta(clone, u, kStrongEdge);
    else
        r.set_weight(u, wu + wother - wab);
    return r;
}

}  // namespace bullfree
