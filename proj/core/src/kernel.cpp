#include "bullfree/kernel.hpp"

#include <climits>
#include <memory>

namespace bullfree {

WeightedTrigraph trigraph_leaf_to_graph(const WeightedTrigraph& leaf, std::vector<EliminationMode>* modes) {
    WeightedTrigraph cur = leaf;
    while (true) {
        auto pairs = cur.base().switchable_pairs();
        if (pairs.empty()) return cur;
        auto [a, b] = pairs.front();
        bool done = false;
        for (EliminationMode m : kAllEliminationModes) {
            WeightedTrigraph cand = eliminate_switchable(cur, a, b, m);
            // Hardening ab only removes antiadjacency, so a new bull must
            // use the clone.
            if (find_bull_through(cand.base(), cand.size() - 1)) continue;
            if (modes) modes->push_back(m);
            cur = std::move(cand);
            done = true;
            break;
        }
        if (!done)
            throw NotInClass("every elimination of switchable pair " + cur.base().label(a) + " " +
                             cur.base().label(b) + " creates a bull");
    }
}

Trigraph unweight(const WeightedTrigraph& g, Weight k) {
    if (!g.base().is_graph()) throw InputError("unweight: input has switchable pairs");
    std::vector<Vertex> owner;
    for (Vertex v = 0; v < g.size(); ++v) {
        Weight w = g.weight(v);
        if (w < 0 || w >= k) throw InputError("unweight: vertex weight must lie in [0, k)");
        for (Weight i = 0; i < w; ++i) owner.push_back(v);
    }
    const int m = static_cast<int>(owner.size());
    Trigraph out(m);
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v)
            if (owner[u] != owner[v] && g.base().strongly_adjacent(owner[u], owner[v])) out.set(u, v, kStrongEdge);
    return out;
}

Oracle exact_oracle() {
    return [](const OracleQuery& q) { return exact_leaf_mwis(q.trigraph, q.target, INT_MAX).weight >= q.target; };
}

Oracle exact_graph_oracle() {
    return [](const OracleQuery& q) {
        if (!q.graph) return exact_leaf_mwis(q.trigraph, q.target, INT_MAX).weight >= q.target;
        return exact_leaf_mwis(WeightedTrigraph(*q.graph), q.target, INT_MAX).weight >= q.target;
    };
}

Oracle replay_oracle(std::vector<bool> answers) {
    auto state = std::make_shared<std::pair<std::vector<bool>, std::size_t>>(std::move(answers), 0);
    return [state](const OracleQuery& q) {
        if (state->second >= state->first.size())
            throw OracleInconsistency("replay: no recorded answer for query " + std::to_string(q.id));
        return static_cast<bool>(state->first[state->second++]);
    };
}

namespace {

class OracleAlpha : public AlphaStrategy {
public:
    OracleAlpha(Weight k, const Oracle& oracle, bool local_first, std::vector<QueryRecord>& log)
        : k_(k), oracle_(oracle), local_first_(local_first), log_(log) {}

    AlphaAnswer alpha(const AlphaRequest& req) override {
        const WeightedTrigraph& t = *req.t;
        std::optional<StableSolution> local;
        if (req.known && *req.known)
            local = **req.known;
        else if (req.tag == LeafOutcome::Tag::FewMaximalSets)
            local = best_enumerated(t, req.cutoff);
        else if (local_first_)
            local = best_enumerated(t, cube_cutoff(t.size()));
        if (local) {
            AlphaAnswer ans;
            ans.alpha = local->weight;
            ans.reached_target = req.target && local->weight >= *req.target;
            ans.witness = local->set;
            return ans;
        }

        Weight heaviest = 0;
        for (Vertex v = 0; v < t.size(); ++v) heaviest = std::max(heaviest, t.weight(v));
        Weight start = req.target ? *req.target : std::min(req.upper, k_);
        std::optional<Trigraph> plain;
        try {
            plain = unweight(trigraph_leaf_to_graph(t), k_);
        } catch (const NotInClass&) {
            // Only possible when the root itself had switchable pairs.
        }
        for (Weight tau = start; tau >= 1; --tau) {
            bool yes = ask(req.role, t, plain, tau);
            if (yes) {
                AlphaAnswer ans;
                ans.alpha = tau;
                ans.reached_target = req.target && tau >= *req.target;
                return ans;
            }
            if (tau <= heaviest)
                throw OracleInconsistency("oracle answered no at target " + std::to_string(tau) +
                                          " but a single vertex already weighs " + std::to_string(heaviest));
        }
        if (t.size() == 0) return {};
        throw OracleInconsistency("oracle answered no at target 1 on a nonempty instance");
    }

private:
    bool ask(AlphaRequest::Role role, const WeightedTrigraph& t, const std::optional<Trigraph>& plain, Weight target) {
        QueryRecord rec;
        rec.query.id = static_cast<int>(log_.size());
        rec.query.role = role;
        rec.query.trigraph = t;
        rec.query.graph = plain;
        rec.query.target = target;
        rec.answer = oracle_(rec.query);
        log_.push_back(std::move(rec));
        return log_.back().answer;
    }

    Weight k_;
    const Oracle& oracle_;
    bool local_first_;
    std::vector<QueryRecord>& log_;
};

}  // namespace

KernelTranscript solve_with_oracle(const WeightedTrigraph& t, Weight k, const Oracle& oracle,
                                   const KernelOptions& opt) {
    if (k < 1) throw InputError("k must be positive");
    KernelTranscript tr;
    tr.k = k;
    OracleAlpha strategy(k, oracle, opt.local_enumeration, tr.queries);
    tr.final = run_decomposition(t, k, strategy, true);
    return tr;
}

}  // namespace bullfree
