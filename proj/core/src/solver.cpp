#include "bullfree/solver.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace bullfree {

WeightedTrigraph preprocess(const WeightedTrigraph& t, std::vector<Vertex>* kept) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < t.size(); ++v)
        if (t.weight(v) > 0) keep.push_back(v);
    WeightedTrigraph out = induce(t, keep);
    for (auto [u, v] : out.base().switchable_pairs())
        if (out.pair_weight(u, v) <= 1) out.set_theta(u, v, kStrongEdge);
    if (kept) *kept = std::move(keep);
    return out;
}

void require_in_class(const Trigraph& t) {
    if (auto v = polygamous_vertex(t))
        throw NotInClass("trigraph is not monogamous: vertex " + t.label(*v) + " is in two switchable pairs");
    if (auto b = find_bull(t)) {
        std::ostringstream os;
        os << "bull found: x1=" << t.label(b->x1) << " x2=" << t.label(b->x2) << " x3=" << t.label(b->x3)
           << " y=" << t.label(b->y) << " z=" << t.label(b->z);
        throw NotInClass(os.str());
    }
}

namespace {

std::optional<std::vector<Vertex>> try_lift(const DecompositionPath& path, std::size_t level,
                                            std::vector<Vertex> set) {
    for (std::size_t l = level + 1; l-- > 0;) {
        const LevelRecord& rec = path.levels[l];
        for (Vertex& v : set) {
            if (v < 0 || v >= static_cast<Vertex>(rec.kept.size())) throw InputError("lift_solution: vertex out of range");
            v = rec.kept[v];
        }
        if (l == 0) break;
        const LevelRecord& prev = path.levels[l - 1];
        if (!prev.y) throw InputError("lift_solution: level has no Y block");
        const Block& y = *prev.y;
        std::vector<Vertex> next;
        bool has_a = false, has_b = false;
        for (Vertex v : set) {
            if (v >= static_cast<Vertex>(y.origin.size())) throw InputError("lift_solution: vertex out of range");
            if (y.origin[v] >= 0) {
                next.push_back(y.origin[v]);
                continue;
            }
            const Marker* m = nullptr;
            for (const auto& mk : y.markers)
                if (mk.vertex == v) m = &mk;
            if (!m) throw InputError("lift_solution: unknown marker");
            if (!prev.optima_known) return std::nullopt;
            if (m->role == MarkerRole::X)
                next.insert(next.end(), prev.opt_x.begin(), prev.opt_x.end());
            else if (m->role == MarkerRole::A)
                has_a = true;
            else
                has_b = true;
        }
        const std::vector<Vertex>* part = nullptr;
        if (has_a && has_b)
            part = &prev.opt_ab;
        else if (has_a)
            part = &prev.opt_a;
        else if (has_b)
            part = &prev.opt_b;
        if (part) next.insert(next.end(), part->begin(), part->end());
        set = std::move(next);
    }
    std::sort(set.begin(), set.end());
    return set;
}

std::vector<Vertex> map_through(const std::vector<Vertex>& local, const std::vector<Vertex>& ids) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(ids[v]);
    std::sort(out.begin(), out.end());
    return out;
}

void name_markers(Block& y, std::size_t level) {
    std::vector<std::string> labels = y.trigraph.base().labels();
    if (labels.empty()) return;
    for (const auto& m : y.markers) labels[m.vertex] = std::string(to_string(m.role)) + "@" + std::to_string(level);
    y.trigraph.set_labels(std::move(labels));
}

class Run {
public:
    Run(std::optional<Weight> w, AlphaStrategy& strategy) : w_(w), strategy_(strategy) {}

    SolveResult go(const WeightedTrigraph& root) {
        require_in_class(root.base());
        if (auto bad = root.check_weights()) throw InputError(*bad);
        if (w_ && *w_ < 1) throw InputError("target must be positive");
        root_ = &root;
        WeightedTrigraph current = root;
        if (!current.base().has_labels()) {
            std::vector<std::string> labels;
            for (Vertex v = 0; v < current.size(); ++v) labels.push_back(std::to_string(v + 1));
            current.set_labels(std::move(labels));
        }
        auto& levels = res_.path.levels;
        for (std::size_t l = 0;; ++l) {
            LevelRecord rec;
            rec.input = std::move(current);
            rec.t = preprocess(rec.input, &rec.kept);
            levels.push_back(std::move(rec));
            if (step(l, current)) return std::move(res_);
        }
    }

private:
    using Tag = LeafOutcome::Tag;

    void yes(std::size_t level, std::optional<std::vector<Vertex>> local, std::string reason) {
        res_.verdict = SolveResult::Verdict::YesAtLeastW;
        res_.reason = std::move(reason);
        if (local) {
            if (auto lifted = try_lift(res_.path, level, *local)) {
                res_.weight = stable_set_weight(*root_, *lifted);
                res_.witness = std::move(lifted);
            }
        }
    }

    void exact(std::size_t level, Weight alpha, std::optional<std::vector<Vertex>> local) {
        res_.verdict = SolveResult::Verdict::Exact;
        res_.weight = alpha;
        if (local) {
            if (auto lifted = try_lift(res_.path, level, *local)) {
                Weight got = stable_set_weight(*root_, *lifted);
                if (got != alpha) throw std::logic_error("lifted stable set has the wrong weight");
                res_.witness = std::move(lifted);
            }
        }
    }

    AlphaAnswer ask(AlphaRequest::Role role, const WeightedTrigraph& t, Tag tag, std::int64_t cutoff,
                    std::optional<Weight> target, Weight upper = std::numeric_limits<Weight>::max(),
                    const std::optional<StableSolution>* known = nullptr) {
        AlphaRequest req{role, &t, tag, cutoff, target, upper, known};
        return strategy_.alpha(req);
    }

    // Returns true when the run is decided.
    bool step(std::size_t l, WeightedTrigraph& next) {
        LevelRecord& r = res_.path.levels[l];
        const WeightedTrigraph& t = r.t;
        if (w_) {
            for (Vertex v = 0; v < t.size(); ++v)
                if (t.weight(v) >= *w_) {
                    yes(l, std::vector<Vertex>{v}, "heavy-vertex");
                    return true;
                }
            for (const auto& [p, pw] : t.pair_weights())
                if (pw >= *w_) {
                    yes(l, std::vector<Vertex>{p.first, p.second}, "heavy-pair");
                    return true;
                }
        }
        if (t.size() == 0) {
            exact(l, 0, std::vector<Vertex>{});
            return true;
        }
        auto cut = find_min_cut(t.base());
        if (!cut) return leaf(l);
        r.cut = cut;

        if (cut->kind == CutKind::SmallPair) {
            const Split& s = *cut->split;
            auto sa = exact_leaf_mwis(induce(t, s.a));
            auto sb = exact_leaf_mwis(induce(t, s.b));
            auto sab = exact_leaf_mwis(induce(t, cut->x));
            r.opt_a = map_through(sa.set, s.a);
            r.opt_b = map_through(sb.set, s.b);
            r.opt_ab = map_through(sab.set, cut->x);
            r.alphas = {0, sa.weight, sb.weight, sab.weight};
            if (w_ && sab.weight >= *w_) {
                yes(l, r.opt_ab, "small-pair");
                return true;
            }
        } else {
            Block bx = block_x(t, *cut);
            Tag tag = Tag::SmallEnough;
            if (w_) {
                auto out = classify_leaf(bx.trigraph, *w_ + 2);
                r.x_outcome = out.tag;
                if (out.tag == Tag::AlphaAtLeastW) {
                    yes(l, std::nullopt, "x-side-alpha");
                    return true;
                }
                tag = out.tag;
            }
            const std::int64_t cutoff = cube_cutoff(bx.trigraph.size());
            auto keep = [&](const AlphaAnswer& ans, const std::vector<Vertex>& ids, std::vector<Vertex>& into) {
                if (ans.witness)
                    into = map_through(*ans.witness, ids);
                else
                    r.optima_known = false;
            };
            WeightedTrigraph tx = induce(t, cut->x);
            if (cut->kind == CutKind::HomogeneousSet) {
                auto ans = ask(AlphaRequest::Role::X, tx, tag, cutoff, w_);
                keep(ans, cut->x, r.opt_x);
                if (ans.reached_target) {
                    yes(l, ans.witness ? std::optional(r.opt_x) : std::nullopt, "x-side");
                    return true;
                }
                r.alphas.x = ans.alpha;
            } else {
                const Split& s = *cut->split;
                auto ab = ask(AlphaRequest::Role::AB, tx, tag, cutoff, w_);
                keep(ab, cut->x, r.opt_ab);
                if (ab.reached_target) {
                    yes(l, ab.witness ? std::optional(r.opt_ab) : std::nullopt, "x-side");
                    return true;
                }
                WeightedTrigraph ta = induce(t, s.a), tb = induce(t, s.b);
                auto a = ask(AlphaRequest::Role::A, ta, tag, cutoff, std::nullopt, ab.alpha);
                auto b = ask(AlphaRequest::Role::B, tb, tag, cutoff, std::nullopt, ab.alpha);
                keep(a, s.a, r.opt_a);
                keep(b, s.b, r.opt_b);
                r.alphas = {0, a.alpha, b.alpha, ab.alpha};
            }
        }
        Block y = block_y(t, *cut, r.alphas);
        name_markers(y, l + 1);
        next = y.trigraph;
        r.y = std::move(y);
        return false;
    }

    bool leaf(std::size_t l) {
        LevelRecord& r = res_.path.levels[l];
        const WeightedTrigraph& t = r.t;
        AlphaAnswer ans;
        if (w_) {
            auto out = classify_leaf(t, *w_);
            r.leaf_outcome = out.tag;
            if (out.tag == Tag::AlphaAtLeastW) {
                yes(l, std::nullopt, "leaf-alpha");
                return true;
            }
            ans = ask(AlphaRequest::Role::Leaf, t, out.tag, cube_cutoff(t.size()), w_,
                      std::numeric_limits<Weight>::max(), &out.best);
        } else {
            ans = ask(AlphaRequest::Role::Leaf, t, Tag::SmallEnough, cube_cutoff(t.size()), std::nullopt);
        }
        if (ans.reached_target)
            yes(l, ans.witness, "leaf");
        else
            exact(l, ans.alpha, ans.witness);
        return true;
    }

    std::optional<Weight> w_;
    AlphaStrategy& strategy_;
    const WeightedTrigraph* root_ = nullptr;
    SolveResult res_;
};

}  // namespace

std::vector<Vertex> lift_solution(const DecompositionPath& path, std::size_t level, std::vector<Vertex> set) {
    if (level >= path.levels.size()) throw InputError("lift_solution: no such level");
    const Trigraph& at = path.levels[level].t.base();
    for (Vertex v : set)
        if (v < 0 || v >= at.size()) throw InputError("lift_solution: vertex out of range");
    if (!is_stable(at, set)) throw InputError("lift_solution: the set is not stable at this level");
    auto out = try_lift(path, level, std::move(set));
    if (!out) throw InputError("lift_solution: the path has no stored optimum for a marker in the set");
    return *out;
}

AlphaAnswer LocalAlpha::alpha(const AlphaRequest& req) {
    StableSolution sol;
    if (req.known && *req.known) {
        sol = **req.known;
    } else if (req.tag == LeafOutcome::Tag::FewMaximalSets) {
        auto best = best_enumerated(*req.t, req.cutoff);
        sol = best ? *best : exact_leaf_mwis(*req.t, req.target, leaf_limit_);
    } else {
        sol = exact_leaf_mwis(*req.t, req.target, leaf_limit_);
    }
    AlphaAnswer ans;
    ans.alpha = sol.weight;
    ans.reached_target = req.target && sol.weight >= *req.target;
    ans.witness = std::move(sol.set);
    return ans;
}

SolveResult run_decomposition(const WeightedTrigraph& t, std::optional<Weight> w, AlphaStrategy& strategy,
                              bool keep_path) {
    SolveResult res = Run(w, strategy).go(t);
    if (!keep_path) res.path.levels.clear();
    return res;
}

SolveResult solve(const WeightedTrigraph& t, Weight w, const SolveOptions& opt) {
    if (w < 1) throw InputError("target must be positive");
    int limit = opt.leaf_limit;
    try {
        Weight f = f_bound(checked_add(w, 2));
        if (f > limit) limit = f > INT_MAX ? INT_MAX : static_cast<int>(f);
    } catch (const WeightOverflow&) {
        limit = INT_MAX;
    }
    LocalAlpha local(limit);
    return run_decomposition(t, w, local, opt.keep_path);
}

SolveResult decompose(const WeightedTrigraph& t, int leaf_limit) {
    LocalAlpha local(leaf_limit);
    return run_decomposition(t, std::nullopt, local, true);
}

}  // namespace bullfree
