#include "bullfree/basic.hpp"

#include <algorithm>
#include <limits>

namespace bullfree {

namespace {

Weight checked_mul(Weight a, Weight b) {
    Weight r;
    if (__builtin_mul_overflow(a, b, &r)) throw WeightOverflow("bound overflow");
    return r;
}

// C(x, 2)
Weight choose2(Weight x) {
    if (x < 2) return 0;
    Weight a = x, b = x - 1;
    if (a % 2 == 0)
        a /= 2;
    else
        b /= 2;
    return checked_mul(a, b);
}

}  // namespace

Weight g_bound(Weight x) {
    if (x < 1) throw InputError("g_bound: x must be positive");
    return choose2(checked_add(x, 1)) - 1;
}

Weight f_bound(Weight x) {
    Weight g = g_bound(x);
    Weight inner = checked_add(checked_add(choose2(g), checked_mul(2, g)), 1);
    return checked_add(g, checked_mul(x - 1, inner));
}

std::int64_t cube_cutoff(int n) {
    std::int64_t m = n;
    return m * m * m;
}

namespace {

// Reverse-search over vertex prefixes. A maximal stable set S of G_{i-1}
// has child S + i when i has no neighbour in S. Otherwise S itself is a
// child, and so is (S - N(i)) + i when that set is maximal in G_i and S is
// the greedy completion of S - N(i) in G_{i-1}.
class MaxStableWalker {
public:
    MaxStableWalker(const Trigraph& t, std::int64_t cutoff,
                    const std::function<bool(const std::vector<Vertex>&)>& visit)
        : t_(t), cutoff_(cutoff), visit_(visit) {}

    std::int64_t run() {
        const int n = t_.size();
        VertexSet s(n);
        if (n == 0) {
            emit(s);
            return count_;
        }
        s.insert(0);
        walk(1, s);
        return count_;
    }

private:
    const VertexSet& nb(Vertex v) const { return t_.strong_neighbors(v); }

    void emit(const VertexSet& s) {
        ++count_;
        if (count_ > cutoff_ || !visit_(s.to_vector())) stopped_ = true;
    }

    bool dominated_in_prefix(const VertexSet& s, Vertex i) const {
        // every u <= i outside s has a neighbour in s
        for (Vertex u = 0; u <= i; ++u)
            if (!s.contains(u) && !nb(u).intersects(s)) return false;
        return true;
    }

    VertexSet greedy_completion(VertexSet s, Vertex below) const {
        for (Vertex u = 0; u < below; ++u)
            if (!s.contains(u) && !nb(u).intersects(s)) s.insert(u);
        return s;
    }

    void walk(Vertex i, VertexSet& s) {
        if (stopped_) return;
        if (i == t_.size()) {
            emit(s);
            return;
        }
        if (!s.intersects(nb(i))) {
            s.insert(i);
            walk(i + 1, s);
            s.erase(i);
            return;
        }
        walk(i + 1, s);
        if (stopped_) return;
        VertexSet rest = s - nb(i);
        VertexSet child = rest;
        child.insert(i);
        if (!dominated_in_prefix(child, i)) return;
        if (!(greedy_completion(rest, i) == s)) return;
        walk(i + 1, child);
    }

    const Trigraph& t_;
    std::int64_t cutoff_;
    const std::function<bool(const std::vector<Vertex>&)>& visit_;
    std::int64_t count_ = 0;
    bool stopped_ = false;
};

}  // namespace

std::int64_t for_each_max_stable(const Trigraph& t, std::int64_t cutoff,
                                 const std::function<bool(const std::vector<Vertex>&)>& visit) {
    return MaxStableWalker(t, cutoff, visit).run();
}

Enumeration enumerate_max_stable(const Trigraph& t, std::int64_t cutoff) {
    Enumeration out;
    std::int64_t seen = for_each_max_stable(t, cutoff, [&](const std::vector<Vertex>& s) {
        out.sets.push_back(s);
        return true;
    });
    if (seen > cutoff) {
        out.too_many = true;
        out.sets.clear();
    }
    return out;
}

std::optional<StableSolution> best_enumerated(const WeightedTrigraph& t, std::int64_t cutoff) {
    StableSolution best;
    bool any = false;
    std::int64_t seen = for_each_max_stable(t.base(), cutoff, [&](const std::vector<Vertex>& s) {
        Weight w = stable_set_weight(t, s);
        if (!any || w > best.weight) {
            best = {s, w};
            any = true;
        }
        return true;
    });
    if (seen > cutoff) return std::nullopt;
    return best;
}

namespace {

// Maximum weight stable set of a graph given as adjacency bitsets.
class BranchAndBound {
public:
    BranchAndBound(std::vector<VertexSet> adj, std::vector<Weight> w, std::optional<Weight> stop_at)
        : adj_(std::move(adj)), w_(std::move(w)), stop_at_(stop_at) {}

    std::vector<Vertex> solve() {
        const int m = static_cast<int>(w_.size());
        VertexSet p(m);
        for (Vertex v = 0; v < m; ++v)
            if (w_[v] > 0) p.insert(v);
        std::vector<Vertex> chosen;
        search(p, 0, chosen);
        return best_set_;
    }

private:
    // Greedy clique cover of p; sum of the heaviest weight per clique.
    Weight cover_bound(const VertexSet& p) const {
        std::vector<Vertex> order = p.to_vector();
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return w_[a] > w_[b]; });
        std::vector<VertexSet> common;  // vertices adjacent to every member
        Weight total = 0;
        for (Vertex v : order) {
            bool placed = false;
            for (auto& c : common) {
                if (c.contains(v)) {
                    c &= adj_[v];
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                common.push_back(adj_[v] & p);
                total += w_[v];
            }
        }
        return total;
    }

    void record(Weight cur, const std::vector<Vertex>& chosen) {
        if (cur > best_) {
            best_ = cur;
            best_set_ = chosen;
            if (stop_at_ && best_ >= *stop_at_) done_ = true;
        }
    }

    void search(VertexSet p, Weight cur, std::vector<Vertex>& chosen) {
        while (!done_) {
            record(cur, chosen);
            if (done_ || p.empty()) return;
            if (cur + cover_bound(p) <= best_) return;
            Vertex pick = -1;
            int pick_deg = -1;
            for (Vertex v = p.first(); v >= 0; v = p.next(v)) {
                int d = (adj_[v] & p).count();
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            if (pick_deg == 0) {
                std::size_t mark = chosen.size();
                Weight total = cur;
                for (Vertex v = p.first(); v >= 0; v = p.next(v)) {
                    chosen.push_back(v);
                    total += w_[v];
                }
                record(total, chosen);
                chosen.resize(mark);
                return;
            }
            chosen.push_back(pick);
            VertexSet with = p - adj_[pick];
            with.erase(pick);
            search(with, cur + w_[pick], chosen);
            chosen.pop_back();
            p.erase(pick);
        }
    }

    std::vector<VertexSet> adj_;
    std::vector<Weight> w_;
    std::optional<Weight> stop_at_;
    Weight best_ = 0;
    std::vector<Vertex> best_set_;
    bool done_ = false;
};

}  // namespace

StableSolution exact_leaf_mwis(const WeightedTrigraph& t, std::optional<Weight> stop_at, int limit) {
    const Trigraph& b = t.base();
    const int n = b.size();
    if (n > limit)
        throw SizeLimitExceeded("exact_leaf_mwis: " + std::to_string(n) + " vertices exceeds the limit of " +
                                std::to_string(limit));
    if (!is_monogamous(b)) throw InputError("exact_leaf_mwis: trigraph is not monogamous");
    if (n == 0) return {};

    // Turn every switchable pair ab into a strong edge plus a clone a' of a
    // (the a->S transform), giving a graph with the same optimum.
    const auto pairs = b.switchable_pairs();
    const int m = n + static_cast<int>(pairs.size());
    std::vector<VertexSet> adj(m, VertexSet(m));
    std::vector<Weight> w(m);
    std::vector<Vertex> clone_of(n, -1);
    for (std::size_t j = 0; j < pairs.size(); ++j) clone_of[pairs[j].first] = n + static_cast<Vertex>(j);
    auto link = [&](Vertex u, Vertex v) {
        adj[u].insert(v);
        adj[v].insert(u);
    };
    for (Vertex u = 0; u < n; ++u) {
        w[u] = t.weight(u);
        const VertexSet& eta = b.strong_neighbors(u);
        for (Vertex v = eta.next(u); v >= 0; v = eta.next(v)) {
            link(u, v);
            // clones copy the strong neighbourhood of their original
            if (clone_of[u] >= 0) link(clone_of[u], v);
            if (clone_of[v] >= 0) link(u, clone_of[v]);
            if (clone_of[u] >= 0 && clone_of[v] >= 0) link(clone_of[u], clone_of[v]);
        }
    }
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        auto [pa, pb] = pairs[j];
        Weight wab = t.pair_weight(pa, pb);
        link(pa, pb);
        w[pa] = t.weight(pa) + t.weight(pb) - wab;
        w[n + static_cast<Vertex>(j)] = wab - t.weight(pb);
    }

    auto found = BranchAndBound(std::move(adj), std::move(w), stop_at).solve();

    VertexSet in(m);
    for (Vertex v : found) in.insert(v);
    StableSolution out;
    for (Vertex u = 0; u < n; ++u) {
        if (clone_of[u] >= 0) {
            Vertex partner = b.switchable_neighbors(u).first();
            if (in.contains(clone_of[u]) && in.contains(partner)) {
                out.set.push_back(u);
                continue;  // partner is added in its own turn
            }
            if (in.contains(u) || in.contains(clone_of[u])) out.set.push_back(u);
            continue;
        }
        if (in.contains(u)) out.set.push_back(u);
    }
    out.weight = stable_set_weight(t, out.set);
    return out;
}

const char* to_string(LeafOutcome::Tag t) {
    switch (t) {
        case LeafOutcome::Tag::SmallEnough: return "small-enough";
        case LeafOutcome::Tag::FewMaximalSets: return "few-maximal-sets";
        case LeafOutcome::Tag::AlphaAtLeastW: return "alpha-at-least-w";
    }
    return "?";
}

LeafOutcome classify_leaf(const WeightedTrigraph& t, Weight w) {
    if (w < 1) throw InputError("classify_leaf: target must be positive");
    for (Vertex v = 0; v < t.size(); ++v)
        if (t.weight(v) < 1) throw InputError("classify_leaf: vertex weights must be at least 1");
    for (const auto& [p, pw] : t.pair_weights())
        if (pw < 2) throw InputError("classify_leaf: switchable pair weights must be at least 2");
    bool small;
    try {
        small = t.size() <= f_bound(w);
    } catch (const WeightOverflow&) {
        small = true;
    }
    if (small) return {LeafOutcome::Tag::SmallEnough, std::nullopt};
    if (auto best = best_enumerated(t, cube_cutoff(t.size())))
        return {LeafOutcome::Tag::FewMaximalSets, std::move(best)};
    return {LeafOutcome::Tag::AlphaAtLeastW, std::nullopt};
}

}  // namespace bullfree
