#include "support.hpp"

#include <bullfree/decomposition.hpp>
#include <bullfree/errors.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace bullfree;
using namespace support;
using testkit::GenModel;
using testkit::GenSpec;

namespace {

bool same(const WeightedTrigraph& a, const WeightedTrigraph& b) { return to_text(a) == to_text(b); }

// The layout the T1 model promises: the first max(1, n/2) vertices induce a
// triangle-free graph, the rest form strong cliques (sizes dealt round
// robin) that are pairwise anticomplete, and each clique vertex sees a
// complete bipartite piece of the base (one side may be empty).
bool t1_layout_ok(const Trigraph& t, int cliques) {
    const int n = t.size();
    const int base = std::max(1, n / 2);
    for (Vertex a = 0; a < base; ++a)
        for (Vertex b = a + 1; b < base; ++b)
            for (Vertex c = b + 1; c < base; ++c)
                if (t.strongly_adjacent(a, b) && t.strongly_adjacent(b, c) && t.strongly_adjacent(a, c)) return false;
    std::vector<int> sizes(static_cast<std::size_t>(cliques), 0);
    for (int i = 0; i < n - base; ++i) ++sizes[static_cast<std::size_t>(i % cliques)];
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    int next = base;
    for (int c = 0; c < cliques; ++c)
        for (int i = 0; i < sizes[static_cast<std::size_t>(c)]; ++i) owner[static_cast<std::size_t>(next++)] = c;
    for (Vertex u = base; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (t.strongly_adjacent(u, v) != (owner[u] == owner[v])) return false;
    for (Vertex v = base; v < n; ++v) {
        std::vector<Vertex> nb;
        for (Vertex u = 0; u < base; ++u)
            if (t.strongly_adjacent(u, v)) nb.push_back(u);
        const std::size_t k = nb.size();
        bool split = false;
        for (std::uint32_t side = 0; side < (1U << k) && !split; ++side) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i)
                for (std::size_t j = i + 1; j < k && ok; ++j)
                    ok = t.strongly_adjacent(nb[i], nb[j]) == (((side >> i) ^ (side >> j)) & 1U);
            split = ok;
        }
        if (!split) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("testkit") {

TEST_CASE("brute_alpha examples") {
    CHECK(testkit::brute_alpha(c5()).weight == 2);
    auto b = testkit::brute_alpha(bull());
    CHECK(b.weight == 3);
    CHECK(b.set == std::vector<Vertex>{2, 3, 4});
    auto p = testkit::brute_alpha(tri("p tri 2\ns 1 2\nw 1 3\nw 2 3\nws 1 2 5\n"));
    CHECK(p.weight == 5);
    CHECK(p.set == std::vector<Vertex>{0, 1});
    CHECK(testkit::brute_alpha(WeightedTrigraph(Trigraph(0))).weight == 0);
    CHECK_THROWS_AS(testkit::brute_alpha(WeightedTrigraph(Trigraph(21))), SizeLimitExceeded);
    CHECK_THROWS_AS(testkit::brute_alpha(c5(), 4), SizeLimitExceeded);

    testkit::Rng rng(139);
    for (int it = 0; it < 150; ++it) {
        auto t = random_weighted(rng, static_cast<int>(rng.uniform(0, 12)), 0.35, 0.3, 6);
        auto r = testkit::brute_alpha(t);
        CHECK(r.weight == naive_alpha(t));
        CHECK(is_stable(t.base(), r.set));
        CHECK(stable_set_weight(t, r.set) == r.weight);
    }
}

TEST_CASE("brute_cuts examples") {
    CHECK(testkit::brute_cuts(c5().base()).empty());

    // 1 and 6 are strong twins in a C5 with a pendant twin.
    auto twin = tri("p tri 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 6 2\ne 6 5\ne 1 6\n").base();
    auto tc = testkit::brute_cuts(twin);
    CHECK(std::find(tc.homogeneous_sets.begin(), tc.homogeneous_sets.end(), std::vector<Vertex>{0, 5}) !=
          tc.homogeneous_sets.end());

    auto seven = tri("p tri 7\ne 1 3\ne 1 4\ne 2 4\ne 3 5\n").base();
    auto sc = testkit::brute_cuts(seven);
    bool found = false;
    for (const auto& s : sc.proper_pairs) found |= s.a == std::vector<Vertex>{0, 1} && s.b == std::vector<Vertex>{2};
    CHECK(found);
    for (const auto& s : sc.proper_pairs) {
        CHECK(s.a.front() < s.b.front());
        CHECK(derive_split(seven, s.a, s.b));
    }
    for (const auto& x : sc.homogeneous_sets) CHECK(check_homogeneous_set(seven, x));

    CHECK_THROWS_AS(testkit::brute_cuts(Trigraph(11)), SizeLimitExceeded);
}

TEST_CASE("rng is the standard engine") {
    // The 10000th output of mt19937_64 with its default seed.
    testkit::Rng rng(5489);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = rng.next();
    CHECK(x == 9981545732273789042ULL);

    testkit::Rng a(7), b(7);
    for (int i = 0; i < 1000; ++i) {
        auto v = a.uniform(-3, 4);
        CHECK(v == b.uniform(-3, 4));
        CHECK(v >= -3);
        CHECK(v <= 4);
    }
    CHECK(a.uniform(5, 5) == 5);
}

TEST_CASE("model names") {
    for (GenModel m : all_models()) CHECK(testkit::parse_model(testkit::to_string(m)) == m);
    CHECK_FALSE(testkit::parse_model("bogus"));
}

TEST_CASE("generator soundness and determinism") {
    int count = 0;
    for (GenModel m : all_models())
        for (int n : {0, 1, 5, 12, 20, 40})
            for (double sw : {0.0, 0.4})
                for (std::uint64_t seed = 1; seed <= 4; ++seed) {
                    GenSpec s;
                    s.model = m;
                    s.n = n;
                    s.seed = seed;
                    s.switchable = sw;
                    s.weight_min = 1;
                    s.weight_max = 5;
                    s.density = 0.3 + 0.1 * static_cast<double>(seed);
                    s.parts = 2 + static_cast<int>(seed % 2);
                    auto t = testkit::generate(s);
                    CHECK(t.size() == n);
                    CHECK(is_monogamous(t.base()));
                    CHECK_FALSE(find_bull(t.base()));
                    for (Vertex v = 0; v < t.size(); ++v) {
                        CHECK(t.weight(v) >= 1);
                        CHECK(t.weight(v) <= 5);
                    }
                    CHECK(same(t, testkit::generate(s)));
                    if (n <= 12) CHECK(naive_bull_free(t.base()));
                    if (sw == 0.0 && m != GenModel::PairExpansion) CHECK(t.base().is_graph());
                    ++count;
                }
    CHECK(count == 6 * 6 * 2 * 4);

    GenSpec bad;
    bad.weight_min = 3;
    bad.weight_max = 2;
    CHECK_THROWS_AS(testkit::generate(bad), InputError);
}

TEST_CASE("reject model is reproducible") {
    GenSpec s;
    s.n = 12;
    s.seed = 42;
    auto a = testkit::generate(s);
    CHECK(same(a, testkit::generate(s)));
    CHECK_FALSE(find_bull(a.base()));
    s.seed = 43;
    CHECK_FALSE(same(a, testkit::generate(s)));
}

TEST_CASE("t1 model layout") {
    for (int parts : {1, 2, 3})
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            GenSpec s;
            s.model = GenModel::T1Style;
            s.n = 8 + static_cast<int>(seed % 9);
            s.seed = seed;
            s.parts = parts;
            s.density = 0.4;
            auto t = testkit::generate(s);
            CHECK(t1_layout_ok(t.base(), parts));
        }
}

TEST_CASE("complete sum of two C5s") {
    Trigraph t(10);
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 5; ++i) t.set(5 * s + i, 5 * s + (i + 1) % 5, kStrongEdge);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = 5; v < 10; ++v) t.set(u, v, kStrongEdge);
    CHECK(naive_bull_free(t));
    auto brute = testkit::brute_cuts(t);
    std::vector<Vertex> left = {0, 1, 2, 3, 4};
    CHECK(std::find(brute.homogeneous_sets.begin(), brute.homogeneous_sets.end(), left) !=
          brute.homogeneous_sets.end());
    auto hs = forcing_hs(t, 0, 1, VertexSet(10, {0, 1}));
    REQUIRE(hs);
    CHECK(hs->to_vector() == left);
    // Small pairs take priority over the homogeneous set.
    CHECK_FALSE(brute.small_pairs.empty());
    CHECK(find_min_cut(t));

    GenSpec s;
    s.model = GenModel::CompleteSum;
    s.n = 10;
    s.parts = 2;
    for (s.seed = 1; s.seed <= 10; ++s.seed) {
        auto g = testkit::generate(s);
        CHECK_FALSE(find_bull(g.base()));
        CHECK(find_min_cut(g.base()));
    }
}

TEST_CASE("manifest round trip") {
    testkit::Manifest m;
    m.spec.model = GenModel::Substitution;
    m.spec.n = 17;
    m.spec.weight_min = 2;
    m.spec.weight_max = 9;
    m.spec.density = 0.25;
    m.spec.switchable = 0.5;
    m.spec.parts = 3;
    m.seeds = {3, 1, 4, 1, 5};
    auto back = testkit::manifest_from_json(testkit::manifest_to_json(m));
    CHECK(back.seeds == m.seeds);
    CHECK(testkit::spec_to_json(back.spec) == testkit::spec_to_json(m.spec));

    auto minimal = testkit::manifest_from_json(R"({"spec": {"model": "t1", "n": 9}, "seeds": [2]})");
    CHECK(minimal.spec.model == GenModel::T1Style);
    CHECK(minimal.spec.weight_max == 1);

    CHECK_THROWS_AS(testkit::manifest_from_json("{"), InputError);
    CHECK_THROWS_AS(testkit::manifest_from_json(R"({"spec": {"model": "x", "n": 3}, "seeds": []})"), InputError);
    CHECK_THROWS_AS(testkit::manifest_from_json(R"({"seeds": []})"), InputError);
}

TEST_CASE("maximal_cliques") {
    auto c = testkit::maximal_cliques(c5().base());
    CHECK(c.size() == 5);
    // Switchable pairs are non-edges.
    auto s = testkit::maximal_cliques(tri("p tri 2\ns 1 2\n").base());
    CHECK(s.size() == 2);

    testkit::Rng rng(149);
    for (int it = 0; it < 80; ++it) {
        Trigraph t = random_monogamous(rng, static_cast<int>(rng.uniform(1, 12)), 0.5, 0.2);
        std::set<std::uint32_t> got;
        for (const auto& q : testkit::maximal_cliques(t)) got.insert(mask_of(q));
        // Maximal cliques are the maximal stable sets of the complement,
        // with switchable pairs read as non-edges on both sides.
        Trigraph comp(t.size());
        for (Vertex u = 0; u < t.size(); ++u)
            for (Vertex v = u + 1; v < t.size(); ++v)
                if (!t.strongly_adjacent(u, v)) comp.set(u, v, kStrongEdge);
        auto naive = naive_maximal_stable(comp);
        CHECK(got == std::set<std::uint32_t>(naive.begin(), naive.end()));
    }
}

TEST_CASE("check_semicoloring examples") {
    auto k3 = tri("p tri 3\ne 1 2\ne 2 3\ne 1 3\n").base();
    auto w = testkit::check_semicoloring(k3, {0, 0, 0});
    REQUIRE(w);
    CHECK(*w == std::vector<Vertex>{0, 1, 2});
    CHECK_FALSE(testkit::check_semicoloring(k3, {0, 0, 1}));

    // Proper colourings are semicolourings.
    testkit::Rng rng(151);
    for (int it = 0; it < 40; ++it) {
        Trigraph t = random_monogamous(rng, static_cast<int>(rng.uniform(1, 14)), 0.4, 0.0);
        std::vector<int> id(static_cast<std::size_t>(t.size()));
        for (Vertex v = 0; v < t.size(); ++v) id[v] = v;
        CHECK_FALSE(testkit::check_semicoloring(t, id));
    }
    // Isolated vertices never count.
    CHECK_FALSE(testkit::check_semicoloring(Trigraph(3), {0, 0, 0}));
    CHECK_THROWS_AS(testkit::check_semicoloring(Trigraph(61), std::vector<int>(61, 0)), SizeLimitExceeded);
}

}  // TEST_SUITE
