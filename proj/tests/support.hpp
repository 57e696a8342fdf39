// Shared helpers for the test binaries: small instance builders, seeded
// corpora and naive reference computations that avoid the library's own
// search code.
#pragma once

#include <bullfree/io.hpp>
#include <bullfree/testkit.hpp>
#include <bullfree/trigraph.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace support {

using namespace bullfree;

inline WeightedTrigraph tri(const std::string& text) { return parse_instance_string(text).trigraph; }

inline WeightedTrigraph c5() { return tri("p tri 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n"); }
// x1=1 x2=2 x3=3 y=4 z=5
inline WeightedTrigraph bull() { return tri("p tri 5\ne 1 2\ne 1 3\ne 2 3\ne 1 4\ne 2 5\n"); }

inline const std::vector<testkit::GenModel>& all_models() {
    static const std::vector<testkit::GenModel> m = {
        testkit::GenModel::Reject,       testkit::GenModel::T1Style,      testkit::GenModel::T1Complement,
        testkit::GenModel::CompleteSum,  testkit::GenModel::Substitution, testkit::GenModel::PairExpansion};
    return m;
}

// Bull-free monogamous weighted instances cycling through every model.
inline std::vector<WeightedTrigraph> corpus(int count, int n_min, int n_max, Weight w_max, std::uint64_t seed,
                                            double switchable = 0.3) {
    std::vector<WeightedTrigraph> out;
    testkit::Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        testkit::GenSpec s;
        s.model = all_models()[static_cast<std::size_t>(i) % all_models().size()];
        s.n = static_cast<int>(rng.uniform(n_min, n_max));
        s.seed = seed * 7919 + static_cast<std::uint64_t>(i);
        s.weight_min = 1;
        s.weight_max = w_max;
        s.density = 0.2 + 0.1 * static_cast<double>(rng.uniform(0, 6));
        s.switchable = rng.chance(0.5) ? switchable : 0.0;
        s.parts = static_cast<int>(rng.uniform(2, 3));
        out.push_back(testkit::generate(s));
    }
    return out;
}

// Arbitrary monogamous trigraph (bulls allowed).
inline Trigraph random_monogamous(testkit::Rng& rng, int n, double p_edge, double p_switch) {
    Trigraph t(n);
    std::vector<char> paired(static_cast<std::size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (!paired[u] && !paired[v] && rng.chance(p_switch)) {
                t.set(u, v, kSwitchable);
                paired[u] = paired[v] = 1;
            } else {
                t.set(u, v, rng.chance(p_edge) ? kStrongEdge : kStrongAntiedge);
            }
        }
    return t;
}

inline WeightedTrigraph random_weighted(testkit::Rng& rng, int n, double p_edge, double p_switch, Weight w_max) {
    WeightedTrigraph t(random_monogamous(rng, n, p_edge, p_switch));
    for (Vertex v = 0; v < n; ++v) t.set_weight(v, rng.uniform(1, w_max));
    for (auto [u, v] : t.base().switchable_pairs()) {
        Weight lo = std::max(t.weight(u), t.weight(v));
        t.set_pair_weight(u, v, rng.uniform(lo, t.weight(u) + t.weight(v)));
    }
    return t;
}

// Weight of a stable set given as a bitmask: vertices without a switchable
// partner inside count alone, each switchable pair inside counts once.
inline Weight naive_weight(const WeightedTrigraph& t, std::uint32_t mask) {
    const int n = t.size();
    Weight w = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (!(mask >> u & 1U)) continue;
        Vertex partner = -1;
        for (Vertex v = 0; v < n; ++v)
            if ((mask >> v & 1U) && t.base().theta(u, v) == kSwitchable && u != v) partner = v;
        if (partner < 0)
            w += t.weight(u);
        else if (u < partner)
            w += t.pair_weight(u, partner);
    }
    return w;
}

inline bool naive_stable(const Trigraph& t, std::uint32_t mask) {
    for (Vertex u = 0; u < t.size(); ++u)
        for (Vertex v = u + 1; v < t.size(); ++v)
            if ((mask >> u & 1U) && (mask >> v & 1U) && t.theta(u, v) == kStrongEdge) return false;
    return true;
}

// Plain 2^n scan.
inline Weight naive_alpha(const WeightedTrigraph& t) {
    Weight best = 0;
    for (std::uint32_t m = 0; m < (1U << t.size()); ++m)
        if (naive_stable(t.base(), m)) best = std::max(best, naive_weight(t, m));
    return best;
}

inline std::vector<std::uint32_t> naive_maximal_stable(const Trigraph& t) {
    std::vector<std::uint32_t> out;
    const int n = t.size();
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        if (!naive_stable(t, m)) continue;
        bool maximal = true;
        for (Vertex v = 0; v < n && maximal; ++v)
            if (!(m >> v & 1U) && naive_stable(t, m | 1U << v)) maximal = false;
        if (maximal) out.push_back(m);
    }
    return out;
}

inline std::uint32_t mask_of(const std::vector<Vertex>& vs) {
    std::uint32_t m = 0;
    for (Vertex v : vs) m |= 1U << v;
    return m;
}

// Does some graph realization of t[five] contain a bull? Tries every
// realization and every role assignment.
inline bool naive_bull_on(const Trigraph& t, std::array<Vertex, 5> five) {
    std::vector<std::pair<int, int>> sw;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (t.theta(five[i], five[j]) == kSwitchable) sw.emplace_back(i, j);
    for (std::uint32_t r = 0; r < (1U << sw.size()); ++r) {
        std::array<std::array<bool, 5>, 5> adj{};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) adj[i][j] = i != j && t.theta(five[i], five[j]) == kStrongEdge;
        for (std::size_t k = 0; k < sw.size(); ++k) {
            bool on = r >> k & 1U;
            adj[sw[k].first][sw[k].second] = adj[sw[k].second][sw[k].first] = on;
        }
        std::array<int, 5> p = {0, 1, 2, 3, 4};
        do {
            // p = (x1, x2, x3, y, z)
            bool ok = adj[p[0]][p[1]] && adj[p[0]][p[2]] && adj[p[1]][p[2]] && adj[p[0]][p[3]] && !adj[p[1]][p[3]] &&
                      !adj[p[2]][p[3]] && adj[p[1]][p[4]] && !adj[p[0]][p[4]] && !adj[p[2]][p[4]] &&
                      !adj[p[3]][p[4]];
            if (ok) return true;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return false;
}

inline bool naive_bull_free(const Trigraph& t) {
    const int n = t.size();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d)
                    for (Vertex e = d + 1; e < n; ++e)
                        if (naive_bull_on(t, {a, b, c, d, e})) return false;
    return true;
}

}  // namespace support
