// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check compares against brute force from testkit
// or the naive helpers in support.hpp.
#include "support.hpp"

#include <bullfree/basic.hpp>
#include <bullfree/coloring.hpp>
#include <bullfree/decomposition.hpp>
#include <bullfree/errors.hpp>
#include <bullfree/kernel.hpp>
#include <bullfree/solver.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace bullfree;
using namespace support;
using testkit::GenModel;
using testkit::GenSpec;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    int failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        pass = false;
        if (failures++ == 0) first_failure = what;
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

bool contains_all(const std::vector<Vertex>& big, const std::vector<Vertex>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool has(const std::vector<Vertex>& v, Vertex x) { return std::binary_search(v.begin(), v.end(), x); }

std::string where(std::size_t i, const WeightedTrigraph& t) {
    return "instance " + std::to_string(i) + " (n=" + std::to_string(t.size()) + ")";
}

// Brute-force alphas of the pieces a cut needs for block_y. Pieces beyond
// the brute-force limit fall back to the exact leaf solver.
SideAlphas brute_sides(const WeightedTrigraph& t, const Cut& cut) {
    auto alpha_of = [&](const std::vector<Vertex>& vs) {
        auto piece = induce(t, vs);
        if (piece.size() > testkit::kBruteAlphaLimit) return exact_leaf_mwis(piece, std::nullopt, piece.size()).weight;
        return testkit::brute_alpha(piece).weight;
    };
    SideAlphas al;
    if (cut.kind == CutKind::HomogeneousSet) {
        al.x = alpha_of(cut.x);
    } else {
        al.a = alpha_of(cut.split->a);
        al.b = alpha_of(cut.split->b);
        al.ab = alpha_of(cut.x);
    }
    return al;
}

// Shared by criteria 1 and 8.
const std::vector<WeightedTrigraph>& sweep() {
    static const std::vector<WeightedTrigraph> s = corpus(1000, 4, 16, 6, 2001);
    return s;
}

void oracle_equivalence(Outcome& o) {
    std::size_t verdicts = 0;
    for (std::size_t i = 0; i < sweep().size(); ++i) {
        const auto& t = sweep()[i];
        const Weight alpha = testkit::brute_alpha(t).weight;
        for (Weight w = 1; w <= 8; ++w) {
            auto r = solve(t, w);
            ++verdicts;
            const bool yes = r.verdict == SolveResult::Verdict::YesAtLeastW;
            o.expect(yes == (alpha >= w), where(i, t) + " W=" + std::to_string(w) + ": verdict");
            if (yes) {
                if (r.witness) o.expect(stable_set_weight(t, *r.witness) >= w, where(i, t) + ": YES witness");
                continue;
            }
            o.expect(r.weight == alpha, where(i, t) + " W=" + std::to_string(w) + ": weight");
            o.expect(r.witness && is_stable(t.base(), *r.witness) && stable_set_weight(t, *r.witness) == alpha,
                     where(i, t) + ": exact witness");
        }
    }
    o.detail << sweep().size() << " instances, " << verdicts << " verdicts";
}

void alpha_preservation(Outcome& o) {
    auto insts = corpus(900, 7, 14, 6, 2002);
    int decomposable = 0;
    for (std::size_t i = 0; i < insts.size() && decomposable < 320; ++i) {
        const auto& t = insts[i];
        auto cut = find_min_cut(t.base());
        if (!cut) continue;
        ++decomposable;
        auto by = block_y(t, *cut, brute_sides(t, *cut));
        o.expect(testkit::brute_alpha(by.trigraph).weight == testkit::brute_alpha(t).weight, where(i, t));
    }
    o.expect(decomposable >= 300, "only " + std::to_string(decomposable) + " decomposable instances");
    o.detail << decomposable << " decomposable instances";
}

void detector_completeness(Outcome& o) {
    testkit::Rng rng(2003);
    std::vector<Trigraph> insts;
    for (int i = 0; i < 1500; ++i) {
        int n = static_cast<int>(rng.uniform(1, 9));
        insts.push_back(random_monogamous(rng, n, 0.15 + 0.1 * static_cast<double>(i % 7), i % 3 ? 0.15 : 0.0));
    }
    for (const auto& t : corpus(500, 4, 9, 1, 2004)) insts.push_back(t.base());

    int cuts = 0, minimal_checked = 0;
    for (std::size_t i = 0; i < insts.size(); ++i) {
        const Trigraph& t = insts[i];
        const int n = t.size();
        const std::string at = "trigraph " + std::to_string(i) + " (n=" + std::to_string(n) + ")";
        auto brute = testkit::brute_cuts(t);
        auto cut = find_min_cut(t);
        o.expect(cut.has_value() == !brute.empty(), at + ": existence");
        if (!cut) continue;
        ++cuts;
        if (!brute.small_pairs.empty()) {
            o.expect(cut->kind == CutKind::SmallPair && cut->split->small() &&
                         derive_split(t, cut->split->a, cut->split->b).has_value(),
                     at + ": small pair first");
            continue;
        }
        std::size_t best = static_cast<std::size_t>(n);
        for (const auto& x : brute.homogeneous_sets) best = std::min(best, x.size());
        for (const auto& s : brute.proper_pairs) best = std::min(best, s.x().size());
        o.expect(cut->x.size() == best, at + ": minimum |X|");

        const auto& x = cut->x;
        if (cut->kind == CutKind::HomogeneousSet) {
            o.expect(check_homogeneous_set(t, x), at + ": not homogeneous");
            // Any two vertices of X seed it, and every homogeneous set over
            // that seed contains X.
            for (std::size_t p = 0; p < x.size(); ++p)
                for (std::size_t q = p + 1; q < x.size(); ++q) {
                    for (const auto& y : brute.homogeneous_sets)
                        if (has(y, x[p]) && has(y, x[q])) o.expect(contains_all(y, x), at + ": HS containment");
                    auto f = forcing_hs(t, x[p], x[q], VertexSet(n, {x[p], x[q]}));
                    o.expect(f && f->to_vector() == x, at + ": forcing_hs");
                    ++minimal_checked;
                }
            continue;
        }
        const Split& s = *cut->split;
        o.expect(s.proper() && derive_split(t, s.a, s.b) == s, at + ": split");
        ProperTuple z{s.a.front(), s.b.front(), s.c.front(), s.d.front()};
        o.expect(is_proper_tuple(t, z), at + ": tuple");
        for (Vertex e : x) {
            if (e == z.a || e == z.b) continue;
            auto res = forcing_hp(t, z, VertexSet(n, {z.a, z.b, e}));
            std::vector<Vertex> got = res.a_side;
            got.insert(got.end(), res.b_side.begin(), res.b_side.end());
            std::sort(got.begin(), got.end());
            o.expect(res.status == PairForcingResult::Status::Found && got == x, at + ": forcing_hp");
            for (const Split& p : brute.proper_pairs)
                for (int flip = 0; flip < 2; ++flip) {
                    const auto& pa = flip ? p.b : p.a;
                    const auto& pb = flip ? p.a : p.b;
                    const auto& pc = flip ? p.d : p.c;
                    const auto& pd = flip ? p.c : p.d;
                    if (has(pa, z.a) && has(pb, z.b) && has(pc, z.c) && has(pd, z.d) && (has(pa, e) || has(pb, e)))
                        o.expect(contains_all(p.x(), x), at + ": HP containment");
                }
            ++minimal_checked;
        }
    }
    o.detail << insts.size() << " trigraphs, " << cuts << " with cuts, " << minimal_checked << " seed checks";
}

void extreme_blocks(Outcome& o) {
    auto insts = corpus(600, 7, 16, 5, 2005);
    for (auto& t : corpus(600, 17, 36, 5, 2015)) insts.push_back(std::move(t));
    int decomposable = 0, minimally_sided = 0;
    for (std::size_t i = 0; i < insts.size(); ++i) {
        const auto& t = insts[i];
        auto cut = find_min_cut(t.base());
        if (!cut) continue;
        ++decomposable;
        auto bx = block_x(t, *cut);
        auto by = block_y(t, *cut, brute_sides(t, *cut));
        for (const Block* b : {&bx, &by})
            o.expect(is_monogamous(b->trigraph.base()) && !find_bull(b->trigraph.base()), where(i, t) + ": block");
        if (cut->kind != CutKind::SmallPair) {
            ++minimally_sided;
            auto inner = find_min_cut(bx.trigraph.base());
            o.expect(!inner || inner->kind == CutKind::SmallPair, where(i, t) + ": block_x has a homogeneous cut");
        }
    }
    o.expect(decomposable >= 200, "too few decomposable instances");
    o.detail << decomposable << " decomposable, " << minimally_sided << " minimally-sided";
}

void bound_constants(Outcome& o) {
    o.expect(f_bound(2) == 8, "f(2) != 8");
    // One constant for the whole range: f(x) <= x^5.
    for (Weight x = 1; x <= 64; ++x) o.expect(f_bound(x) <= x * x * x * x * x, "f(" + std::to_string(x) + ")");
    o.detail << "f(2)=" << f_bound(2) << ", f(x)<=x^5 for x<=64, f(64)=" << f_bound(64);
}

void transform_invariance(Outcome& o) {
    auto insts = corpus(1400, 3, 12, 6, 2006, 0.5);
    int used = 0, transforms = 0;
    for (std::size_t i = 0; i < insts.size() && used < 320; ++i) {
        const auto& t = insts[i];
        auto pairs = t.base().switchable_pairs();
        if (pairs.empty()) continue;
        ++used;
        const Weight alpha = testkit::brute_alpha(t).weight;
        for (auto [a, b] : pairs)
            for (auto mode : kAllEliminationModes) {
                auto r = eliminate_switchable(t, a, b, mode);
                ++transforms;
                o.expect(testkit::brute_alpha(r).weight == alpha, where(i, t) + " mode " + to_string(mode));
            }
    }
    o.expect(used >= 300, "only " + std::to_string(used) + " instances with switchable pairs");
    o.detail << used << " instances, " << transforms << " transforms";
}

void enumeration_counts(Outcome& o) {
    int exhaustive = 0, larger = 0;
    for (std::uint64_t seed = 1; seed <= 160; ++seed) {
        GenSpec s;
        s.model = GenModel::T1Complement;
        s.seed = 2007 * 1000 + seed;
        s.n = seed <= 120 ? 5 + static_cast<int>(seed % 10) : 15 + static_cast<int>(seed % 26);
        s.density = 0.2 + 0.1 * static_cast<double>(seed % 5);
        s.parts = 1 + static_cast<int>(seed % 4);
        const Trigraph t = testkit::generate(s).base();
        const std::string at = "T1 complement seed " + std::to_string(s.seed);
        auto e = enumerate_max_stable(t, cube_cutoff(t.size()));
        o.expect(!e.too_many, at + ": cutoff reached");
        if (e.too_many) continue;
        std::set<std::uint32_t> got;
        for (const auto& set : e.sets) {
            o.expect(is_stable(t, set), at + ": not stable");
            for (Vertex v = 0; v < t.size(); ++v) {
                if (has(set, v)) continue;
                auto bigger = set;
                bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
                o.expect(!is_stable(t, bigger), at + ": not maximal");
            }
            if (t.size() <= 14) got.insert(mask_of(set));
        }
        if (t.size() <= 14) {
            ++exhaustive;
            auto naive = naive_maximal_stable(t);
            o.expect(got.size() == e.sets.size() && got == std::set<std::uint32_t>(naive.begin(), naive.end()),
                     at + ": differs from exhaustive enumeration");
        } else {
            ++larger;
        }
    }
    o.detail << exhaustive << " exhaustive (n<=14), " << larger << " larger under cutoff";
}

void kernel_contract(Outcome& o) {
    std::size_t runs = 0, queries = 0, graph_queries = 0;
    for (std::size_t i = 0; i < sweep().size(); ++i) {
        const auto& t = sweep()[i];
        for (Weight k = 1; k <= 8; ++k)
        for (bool enumerate : {true, false}) {
            const std::string at = where(i, t) + " k=" + std::to_string(k) + (enumerate ? "" : " no-enum");
            KernelOptions opt;
            opt.local_enumeration = enumerate;
            auto direct = solve(t, k);
            auto tr = solve_with_oracle(t, k, exact_graph_oracle(), opt);
            ++runs;
            o.expect(tr.final.verdict == direct.verdict, at + ": verdict");
            if (direct.verdict == SolveResult::Verdict::Exact) o.expect(tr.final.weight == direct.weight, at + ": weight");
            o.expect(tr.queries.size() <= static_cast<std::size_t>(t.size()) * static_cast<std::size_t>(k + 2),
                     at + ": query count");
            const Weight fk = f_bound(k + 2);
            std::vector<bool> answers;
            for (const auto& q : tr.queries) {
                ++queries;
                answers.push_back(q.answer);
                o.expect(q.query.trigraph.size() <= fk, at + ": trigraph query size");
                if (q.query.graph) {
                    ++graph_queries;
                    o.expect(q.query.graph->size() <= (k - 1) * fk && q.query.graph->is_graph(), at + ": graph query");
                }
            }
            auto again = solve_with_oracle(t, k, replay_oracle(answers), opt);
            o.expect(again.final.verdict == tr.final.verdict && again.final.weight == tr.final.weight &&
                         again.queries.size() == tr.queries.size(),
                     at + ": replay");
        }
    }
    o.expect(queries > 0, "no oracle queries issued");
    o.detail << runs << " runs, " << queries << " queries (" << graph_queries << " with a graph form)";
}

void coloring(Outcome& o) {
    auto insts = corpus(200, 5, 60, 1, 2009, 0.0);
    int levels_max = 0;
    for (std::size_t i = 0; i < insts.size(); ++i) {
        const Trigraph& g = insts[i].base();
        auto s = semicolor(g);
        o.expect(!testkit::check_semicoloring(g, s.colour), where(i, insts[i]) + ": monochromatic maximal clique");
        int levels = 0;
        auto c = chi_color(g, &levels);
        o.expect(is_proper_coloring(g, c.colour), where(i, insts[i]) + ": improper colouring");
        levels_max = std::max(levels_max, levels);
    }
    o.detail << insts.size() << " graphs, up to " << levels_max << " semicolouring levels";
}

// Complement of a random maximal triangle-free graph: bull-free (the bull is
// self-complementary and contains a triangle) with alpha <= 2.
WeightedTrigraph co_triangle_free(int n, std::uint64_t seed) {
    testkit::Rng rng(seed);
    Trigraph g(n);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    rng.shuffle(pairs);
    for (auto [u, v] : pairs)
        if (!g.strong_neighbors(u).intersects(g.strong_neighbors(v))) g.set(u, v, kStrongEdge);
    return WeightedTrigraph(complement(g));
}

void scale_smoke(Outcome& o) {
    using clock = std::chrono::steady_clock;
    std::vector<std::pair<std::string, WeightedTrigraph>> big;
    for (GenModel m : all_models())
        for (std::uint64_t seed : {1, 2}) {
            GenSpec s;
            s.model = m;
            s.n = 200;
            s.seed = 2010 * 100 + seed;
            s.density = m == GenModel::T1Complement ? 0.5 : 0.3;
            s.switchable = seed == 2 ? 0.2 : 0.0;
            big.emplace_back(std::string(testkit::to_string(m)) + " seed " + std::to_string(s.seed),
                             testkit::generate(s));
        }
    for (std::uint64_t seed : {1, 2})
        big.emplace_back("co-triangle-free seed " + std::to_string(seed), co_triangle_free(200, 2012 + seed));

    double slowest = 0;
    int yes = 0, exact = 0;
    for (const auto& [at, t] : big) {
        o.expect(!find_bull(t.base()) && is_monogamous(t.base()), at + ": not in class");
        const auto start = clock::now();
        auto r = solve(t, 3);
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        slowest = std::max(slowest, secs);
        o.expect(secs < 60.0, at + ": took " + std::to_string(secs) + " s");
        if (r.verdict == SolveResult::Verdict::YesAtLeastW) {
            ++yes;
            if (r.witness) o.expect(stable_set_weight(t, *r.witness) >= 3, at + ": YES witness");
        } else {
            ++exact;
            o.expect(r.weight < 3 && r.witness && stable_set_weight(t, *r.witness) == r.weight, at + ": exact");
        }
    }

    // Spot checks: induced subtrigraphs on 16 vertices, solved and compared
    // with brute force.
    testkit::Rng rng(2011);
    for (int i = 0; i < 10; ++i) {
        const auto& t = big[static_cast<std::size_t>(i) * big.size() / 10].second;
        std::vector<Vertex> all(static_cast<std::size_t>(t.size()));
        for (Vertex v = 0; v < t.size(); ++v) all[v] = v;
        rng.shuffle(all);
        all.resize(16);
        std::sort(all.begin(), all.end());
        auto sub = induce(t, all);
        const Weight alpha = testkit::brute_alpha(sub).weight;
        for (Weight w = 1; w <= 8; ++w) {
            auto r = solve(sub, w);
            const bool ok = r.verdict == SolveResult::Verdict::YesAtLeastW ? alpha >= w : r.weight == alpha;
            o.expect(ok, "spot check " + std::to_string(i) + " W=" + std::to_string(w));
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", slowest);
    o.detail << big.size() << " instances at n=200 (" << yes << " YES, " << exact << " exact), slowest " << buf
             << " s, 10 spot checks";
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
};

}  // namespace

// With arguments, only the listed criteria run.
int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence", oracle_equivalence},
        {2, "alpha preservation", alpha_preservation},
        {3, "detector completeness and minimality", detector_completeness},
        {4, "extreme decomposition blocks", extreme_blocks},
        {5, "bound constants", bound_constants},
        {6, "transform invariance", transform_invariance},
        {7, "enumeration counts", enumeration_counts},
        {8, "turing kernel contract", kernel_contract},
        {9, "coloring", coloring},
        {10, "scale smoke", scale_smoke},
    };
    int failed = 0, ran = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        ++ran;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d: %s  %s: %s (%.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                    o.detail.str().c_str(), secs);
        if (!o.pass) {
            std::printf("    %d failure(s), first: %s\n", o.failures, o.first_failure.c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", ran - failed, ran);
    return failed ? 1 : 0;
}
