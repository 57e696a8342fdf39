#include "bullfree/testkit.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace bullfree::testkit {

namespace {

class StableWalk {
public:
    explicit StableWalk(const WeightedTrigraph& t) : t_(t), partner_(t.size(), -1), in_(t.size(), 0) {
        for (auto [u, v] : t.base().switchable_pairs()) {
            partner_[u] = v;
            partner_[v] = u;
        }
    }

    BruteAlpha run() {
        walk(0, 0);
        return best_;
    }

private:
    void walk(Vertex from, Weight cur) {
        if (cur > best_.weight) {
            best_.weight = cur;
            best_.set = chosen_;
        }
        for (Vertex v = from; v < t_.size(); ++v) {
            bool ok = true;
            for (Vertex u : chosen_)
                if (t_.base().strongly_adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            Vertex p = partner_[v];
            // p, if chosen, stops being a core vertex
            Weight gain = (p >= 0 && in_[p]) ? t_.pair_weight(v, p) - t_.weight(p) : t_.weight(v);
            chosen_.push_back(v);
            in_[v] = 1;
            walk(v + 1, cur + gain);
            in_[v] = 0;
            chosen_.pop_back();
        }
    }

    const WeightedTrigraph& t_;
    std::vector<Vertex> partner_;
    std::vector<char> in_;
    std::vector<Vertex> chosen_;
    BruteAlpha best_;
};

}  // namespace

BruteAlpha brute_alpha(const WeightedTrigraph& t, int limit) {
    if (t.size() > limit) throw SizeLimitExceeded("brute_alpha: instance too large");
    if (!is_monogamous(t.base())) throw InputError("brute_alpha: trigraph is not monogamous");
    return StableWalk(t).run();
}

BruteCuts brute_cuts(const Trigraph& t, int limit) {
    const int n = t.size();
    if (n > limit) throw SizeLimitExceeded("brute_cuts: instance too large");
    BruteCuts out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<Vertex> x;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1) x.push_back(v);
        if (check_homogeneous_set(t, x)) out.homogeneous_sets.push_back(std::move(x));
    }
    std::sort(out.homogeneous_sets.begin(), out.homogeneous_sets.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    // 0 = outside, 1 = A, 2 = B
    std::vector<int> side(n, 0);
    while (true) {
        std::vector<Vertex> a, b;
        for (Vertex v = 0; v < n; ++v) {
            if (side[v] == 1) a.push_back(v);
            if (side[v] == 2) b.push_back(v);
        }
        if (!a.empty() && !b.empty() && a.front() < b.front()) {
            if (auto s = derive_split(t, a, b)) {
                if (s->small()) out.small_pairs.push_back(*s);
                if (s->proper()) out.proper_pairs.push_back(*s);
            }
        }
        int i = 0;
        while (i < n && side[i] == 2) side[i++] = 0;
        if (i == n) break;
        ++side[i];
    }
    return out;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(eng_());
    // largest multiple of span that fits
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::chance(double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    // 53 random bits
    double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return u < p;
}

const char* to_string(GenModel m) {
    switch (m) {
        case GenModel::Reject: return "reject";
        case GenModel::T1Style: return "t1";
        case GenModel::T1Complement: return "t1-complement";
        case GenModel::CompleteSum: return "complete-sum";
        case GenModel::Substitution: return "substitution";
        case GenModel::PairExpansion: return "pair-expansion";
    }
    return "?";
}

std::optional<GenModel> parse_model(const std::string& s) {
    for (GenModel m : {GenModel::Reject, GenModel::T1Style, GenModel::T1Complement, GenModel::CompleteSum,
                       GenModel::Substitution, GenModel::PairExpansion})
        if (s == to_string(m)) return m;
    return std::nullopt;
}

namespace {

constexpr int kVertexTries = 64;

// Adds vertex after vertex with random adjacency, resampling any choice that
// creates a bull. When the budget runs out the new vertex becomes a twin of
// an existing one, which cannot create a bull.
Trigraph grow_bull_free(Rng& rng, int n, double density) {
    Trigraph t(0);
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kVertexTries && !placed; ++attempt) {
            Trigraph c = t;
            Vertex v = c.add_vertex();
            for (Vertex u = 0; u < v; ++u)
                if (rng.chance(density)) c.set(u, v, kStrongEdge);
            if (!find_bull_through(c, v)) {
                t = std::move(c);
                placed = true;
            }
        }
        if (!placed) {
            Vertex twin = static_cast<Vertex>(rng.uniform(0, t.size() - 1));
            bool adjacent_twin = rng.chance(0.5);
            Vertex v = t.add_vertex();
            for (Vertex u = 0; u < v; ++u)
                if (u != twin && t.strongly_adjacent(u, twin)) t.set(u, v, kStrongEdge);
            if (adjacent_twin) t.set(twin, v, kStrongEdge);
        }
    }
    return t;
}

// Turns random pairs between unmatched vertices into switchable pairs when
// that keeps the trigraph bull-free.
void sprinkle_switchable(Rng& rng, Trigraph& t, double p) {
    if (p <= 0) return;
    std::vector<char> used(t.size(), 0);
    for (Vertex u = 0; u < t.size(); ++u) {
        if (used[u] || !rng.chance(p)) continue;
        std::vector<Vertex> cand;
        for (Vertex v = 0; v < t.size(); ++v)
            if (v != u && !used[v]) cand.push_back(v);
        rng.shuffle(cand);
        for (Vertex v : cand) {
            int old = t.theta(u, v);
            t.set(u, v, kSwitchable);
            if (!find_bull_through(t, u) && !find_bull_through(t, v)) {
                used[u] = used[v] = 1;
                break;
            }
            t.set(u, v, old);
        }
    }
}

WeightedTrigraph with_weights(Rng& rng, Trigraph t, Weight lo, Weight hi) {
    std::vector<Weight> w(t.size());
    for (auto& x : w) x = rng.uniform(lo, hi);
    WeightedTrigraph out(std::move(t), w);
    for (auto [u, v] : out.base().switchable_pairs()) {
        Weight a = out.weight(u), b = out.weight(v);
        out.set_pair_weight(u, v, rng.uniform(std::max(a, b), a + b));
    }
    return out;
}

Trigraph triangle_free(Rng& rng, int n, double density) {
    Trigraph t(n);
    std::vector<VertexPair> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    rng.shuffle(pairs);
    for (auto [u, v] : pairs) {
        if (!rng.chance(density)) continue;
        if (t.strong_neighbors(u).intersects(t.strong_neighbors(v))) continue;
        t.set(u, v, kStrongEdge);
    }
    return t;
}

// Triangle-free part plus strong cliques that are pairwise anticomplete.
// Each clique vertex sees a stable set A of the triangle-free part and a set
// B of common neighbours of A; attachments that create a bull are dropped.
Trigraph t1_style(Rng& rng, int n, double density, int cliques) {
    cliques = std::max(1, cliques);
    int base = std::max(1, n / 2);
    int rest = n - base;
    Trigraph t = triangle_free(rng, base, density);
    std::vector<int> sizes(cliques, 0);
    for (int i = 0; i < rest; ++i) ++sizes[i % cliques];
    for (int size : sizes) {
        std::vector<Vertex> clique;
        for (int i = 0; i < size; ++i) {
            Vertex v = t.add_vertex();
            for (Vertex c : clique) t.set(c, v, kStrongEdge);
            bool placed = false;
            for (int attempt = 0; attempt < kVertexTries && !placed; ++attempt) {
                VertexSet a(t.size());
                for (Vertex u = 0; u < base; ++u) {
                    if (!rng.chance(0.3)) continue;
                    if (t.strong_neighbors(u).intersects(a)) continue;
                    a.insert(u);
                }
                VertexSet common = VertexSet::full(t.size());
                for (Vertex u = a.first(); u >= 0; u = a.next(u)) common &= t.strong_neighbors(u);
                Trigraph c = t;
                for (Vertex u = a.first(); u >= 0; u = a.next(u)) c.set(u, v, kStrongEdge);
                if (!a.empty())
                    for (Vertex u = common.first(); u >= 0 && u < base; u = common.next(u))
                        if (rng.chance(0.5)) c.set(u, v, kStrongEdge);
                if (!find_bull_through(c, v)) {
                    t = std::move(c);
                    placed = true;
                }
            }
            if (!placed && !clique.empty()) {
                // true twin of the previous clique vertex
                Vertex twin = clique.back();
                for (Vertex u = 0; u < base; ++u)
                    if (t.strongly_adjacent(u, twin)) t.set(u, v, kStrongEdge);
            }
            clique.push_back(v);
        }
    }
    return t;
}

// Every vertex of g1 strongly complete to every vertex of g2.
Trigraph complete_sum(const std::vector<Trigraph>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.size();
    Trigraph t(n);
    int offset = 0;
    std::vector<int> owner(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (Vertex u = 0; u < parts[i].size(); ++u) {
            owner[offset + u] = static_cast<int>(i);
            for (Vertex v = u + 1; v < parts[i].size(); ++v) t.set(offset + u, offset + v, parts[i].theta(u, v));
        }
        offset += parts[i].size();
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (owner[u] != owner[v]) t.set(u, v, kStrongEdge);
    return t;
}

std::vector<int> split_sizes(Rng& rng, int n, int parts) {
    parts = std::clamp(parts, 1, std::max(1, n));
    std::vector<int> sizes(parts, 1);
    for (int i = parts; i < n; ++i) ++sizes[rng.uniform(0, parts - 1)];
    return sizes;
}

// Substitutes a bull-free graph for each vertex of a bull-free quotient.
Trigraph substitution(Rng& rng, int n, double density, int parts, double sw) {
    auto sizes = split_sizes(rng, n, parts);
    Trigraph quotient = grow_bull_free(rng, static_cast<int>(sizes.size()), density);
    std::vector<Trigraph> blocks;
    for (int s : sizes) {
        Trigraph b = grow_bull_free(rng, s, density);
        sprinkle_switchable(rng, b, sw);
        blocks.push_back(std::move(b));
    }
    Trigraph t(n);
    std::vector<int> owner, local;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (Vertex u = 0; u < blocks[i].size(); ++u) {
            owner.push_back(static_cast<int>(i));
            local.push_back(u);
        }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            int th = owner[u] == owner[v] ? blocks[owner[u]].theta(local[u], local[v])
                                          : quotient.theta(owner[u], owner[v]);
            t.set(u, v, th);
        }
    return t;
}

// Replaces the two ends a, b of a switchable pair by strong stable sets A
// and B that copy the outside neighbourhoods of a and b. Between A and B
// goes either a random bipartite pattern or an alternating even cycle (which
// leaves no small homogeneous pair inside A u B). Results with a bull are
// discarded.
Trigraph pair_expansion(Rng& rng, int n, double density, double sw) {
    const int max_side = std::max(1, (n - 3) / 2);
    for (int attempt = 0; attempt < kVertexTries; ++attempt) {
        const int m = static_cast<int>(rng.uniform(1, max_side));
        const int base_n = n - 2 * (m - 1);
        if (base_n < 2) continue;
        Trigraph base = grow_bull_free(rng, base_n, density);
        sprinkle_switchable(rng, base, std::max(sw, 0.3));
        auto pairs = base.switchable_pairs();
        if (pairs.empty()) continue;
        auto [a, b] = pairs[rng.uniform(0, static_cast<std::int64_t>(pairs.size()) - 1)];
        Trigraph t = base;
        t.set(a, b, kStrongAntiedge);
        std::vector<Vertex> side_a{a}, side_b{b};
        for (int i = 1; i < m; ++i)
            for (int s = 0; s < 2; ++s) {
                Vertex src = s == 0 ? a : b;
                Vertex v = t.add_vertex();
                for (Vertex u = 0; u < base_n; ++u)
                    if (u != a && u != b && t.strongly_adjacent(u, src)) t.set(u, v, kStrongEdge);
                (s == 0 ? side_a : side_b).push_back(v);
            }
        if (m >= 2 && rng.chance(0.5)) {
            for (int i = 0; i < m; ++i) {
                t.set(side_a[i], side_b[i], kStrongEdge);
                t.set(side_b[i], side_a[(i + 1) % m], kStrongEdge);
            }
        } else {
            for (Vertex x : side_a)
                for (Vertex y : side_b)
                    if (rng.chance(density)) t.set(x, y, kStrongEdge);
        }
        if (!find_bull(t)) return t;
    }
    return grow_bull_free(rng, n, density);
}

Trigraph build(const GenSpec& spec, Rng& rng) {
    const int n = std::max(0, spec.n);
    if (n == 0) return Trigraph(0);
    switch (spec.model) {
        case GenModel::Reject: {
            Trigraph t = grow_bull_free(rng, n, spec.density);
            sprinkle_switchable(rng, t, spec.switchable);
            return t;
        }
        case GenModel::T1Style: return t1_style(rng, n, spec.density, spec.parts);
        case GenModel::T1Complement: return complement(t1_style(rng, n, spec.density, spec.parts));
        case GenModel::CompleteSum: {
            std::vector<Trigraph> parts;
            for (int s : split_sizes(rng, n, spec.parts)) {
                Trigraph p = grow_bull_free(rng, s, spec.density);
                sprinkle_switchable(rng, p, spec.switchable);
                parts.push_back(std::move(p));
            }
            return complete_sum(parts);
        }
        case GenModel::Substitution: return substitution(rng, n, spec.density, spec.parts, spec.switchable);
        case GenModel::PairExpansion: {
            // The expansion needs switchable pairs to start from; with no
            // switchable pairs requested the leftovers are realized as edges.
            Trigraph t = pair_expansion(rng, n, spec.density, spec.switchable);
            return spec.switchable > 0 ? t : full_realization(t);
        }
    }
    throw std::invalid_argument("unknown generator model");
}

}  // namespace

WeightedTrigraph generate(const GenSpec& spec) {
    if (spec.weight_min < 0 || spec.weight_max < spec.weight_min) throw InputError("generate: bad weight range");
    Rng rng(spec.seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Trigraph t = build(spec, rng);
        if (is_monogamous(t) && !find_bull(t)) return with_weights(rng, std::move(t), spec.weight_min, spec.weight_max);
    }
    throw std::runtime_error(std::string("generate: resample budget exhausted for model ") + to_string(spec.model));
}

namespace {

nlohmann::json spec_json(const GenSpec& s) {
    return {{"model", to_string(s.model)}, {"n", s.n},
            {"seed", s.seed},        {"weight_min", s.weight_min},
            {"weight_max", s.weight_max}, {"density", s.density},
            {"switchable", s.switchable}, {"parts", s.parts}};
}

GenSpec spec_from(const nlohmann::json& j) {
    GenSpec s;
    auto m = parse_model(j.at("model").get<std::string>());
    if (!m) throw InputError("manifest: unknown model");
    s.model = *m;
    s.n = j.at("n").get<int>();
    s.seed = j.value("seed", std::uint64_t{1});
    s.weight_min = j.value("weight_min", Weight{1});
    s.weight_max = j.value("weight_max", Weight{1});
    s.density = j.value("density", 0.5);
    s.switchable = j.value("switchable", 0.0);
    s.parts = j.value("parts", 2);
    return s;
}

}  // namespace

std::string spec_to_json(const GenSpec& s) { return spec_json(s).dump(); }

std::string manifest_to_json(const Manifest& m) {
    nlohmann::json j{{"spec", spec_json(m.spec)}, {"seeds", m.seeds}};
    return j.dump(2);
}

Manifest manifest_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        Manifest m;
        m.spec = spec_from(j.at("spec"));
        m.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("manifest: ") + e.what());
    }
}

namespace {

void bron_kerbosch(const Trigraph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<std::vector<Vertex>>& out) {
    if (p.empty()) {
        if (x.empty()) out.push_back(r.to_vector());
        return;
    }
    // pivot with most neighbours in p
    Vertex pivot = -1;
    int best = -1;
    for (const VertexSet* s : {&p, &x})
        for (Vertex u = s->first(); u >= 0; u = s->next(u)) {
            int c = (g.strong_neighbors(u) & p).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
    VertexSet cand = p - g.strong_neighbors(pivot);
    for (Vertex v = cand.first(); v >= 0; v = cand.next(v)) {
        r.insert(v);
        bron_kerbosch(g, r, p & g.strong_neighbors(v), x & g.strong_neighbors(v), out);
        r.erase(v);
        p.erase(v);
        x.insert(v);
    }
}

}  // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const Trigraph& g) {
    std::vector<std::vector<Vertex>> out;
    if (g.size() == 0) return out;
    VertexSet r(g.size());
    bron_kerbosch(g, r, VertexSet::full(g.size()), VertexSet(g.size()), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<Vertex>> check_semicoloring(const Trigraph& g, const std::vector<int>& colour, int limit) {
    if (g.size() > limit) throw SizeLimitExceeded("check_semicoloring: instance too large");
    if (static_cast<int>(colour.size()) != g.size()) throw InputError("check_semicoloring: colour count mismatch");
    for (const auto& c : maximal_cliques(g)) {
        if (c.size() < 2) continue;
        bool mono = std::all_of(c.begin(), c.end(), [&](Vertex v) { return colour[v] == colour[c.front()]; });
        if (mono) return c;
    }
    return std::nullopt;
}

}  // namespace bullfree::testkit
