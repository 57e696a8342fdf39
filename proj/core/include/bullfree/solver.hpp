#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bullfree/basic.hpp"
#include "bullfree/decomposition.hpp"
#include "bullfree/trigraph.hpp"

namespace bullfree {

// Deletes weight-0 vertices and hardens switchable pairs of weight 1 into
// strong edges. `kept[i]` is the input vertex behind output vertex i.
WeightedTrigraph preprocess(const WeightedTrigraph& t, std::vector<Vertex>* kept = nullptr);

// One step of the decomposition path.
struct LevelRecord {
    WeightedTrigraph input;      // what this level received
    std::vector<Vertex> kept;    // preprocess map: t vertex -> input vertex
    WeightedTrigraph t;          // after preprocessing
    std::optional<Cut> cut;      // absent at the leaf
    std::optional<Block> y;      // T_Y handed to the next level
    // Maximum weight stable sets of the X side, in t's vertex ids. Empty
    // when the strategy gave no witness.
    std::vector<Vertex> opt_x, opt_a, opt_b, opt_ab;
    bool optima_known = true;
    SideAlphas alphas;
    std::optional<LeafOutcome::Tag> x_outcome;     // classify_leaf on T_X
    std::optional<LeafOutcome::Tag> leaf_outcome;  // classify_leaf on the leaf
};

struct DecompositionPath {
    std::vector<LevelRecord> levels;
};

// Maps a stable set of levels[level].t back to the root input, replacing
// marker vertices by the stored X-side optima. Throws InputError when the
// set does not fit the path.
std::vector<Vertex> lift_solution(const DecompositionPath& path, std::size_t level, std::vector<Vertex> set);

// Exact alpha of a subproblem, or the fact that it reaches a target.
struct AlphaRequest {
    enum class Role { Leaf, X, A, B, AB };
    Role role;
    const WeightedTrigraph* t;
    // How classify_leaf came out on the enclosing instance: SmallEnough
    // bounds the size, FewMaximalSets guarantees that `cutoff` maximal
    // stable sets suffice.
    LeafOutcome::Tag tag;
    std::int64_t cutoff;
    std::optional<Weight> target;                   // reaching it decides the run
    Weight upper = std::numeric_limits<Weight>::max();  // known bound on alpha
    const std::optional<StableSolution>* known = nullptr;
};

struct AlphaAnswer {
    bool reached_target = false;  // alpha >= target; `alpha` is then only a lower bound
    Weight alpha = 0;
    std::optional<std::vector<Vertex>> witness;  // a set of that weight, if available
};

class AlphaStrategy {
public:
    virtual ~AlphaStrategy() = default;
    virtual AlphaAnswer alpha(const AlphaRequest& req) = 0;
};

// Branch and bound or enumeration, locally.
class LocalAlpha : public AlphaStrategy {
public:
    explicit LocalAlpha(int leaf_limit = kDefaultLeafLimit) : leaf_limit_(leaf_limit) {}
    AlphaAnswer alpha(const AlphaRequest& req) override;

private:
    int leaf_limit_;
};

struct SolveResult {
    enum class Verdict { YesAtLeastW, Exact };
    Verdict verdict = Verdict::Exact;
    // Root vertex ids. Always set for Exact answers of the local solver;
    // for YES it is set when the run found a concrete set.
    std::optional<std::vector<Vertex>> witness;
    Weight weight = 0;  // exact alpha, or the witness weight for YES (0 without one)
    std::string reason;  // which step decided a YES
    DecompositionPath path;
};

struct SolveOptions {
    int leaf_limit = kDefaultLeafLimit;  // raised to f(W+2) automatically
    bool keep_path = true;
};

// YES if alpha(t) >= w, otherwise a maximum weight stable set. Throws
// NotInClass for non-monogamous input or when t contains a bull.
SolveResult solve(const WeightedTrigraph& t, Weight w, const SolveOptions& opt = {});

// The same decomposition driven by an arbitrary alpha strategy. `w` absent
// means: no target, compute alpha exactly at every step.
SolveResult run_decomposition(const WeightedTrigraph& t, std::optional<Weight> w, AlphaStrategy& strategy,
                              bool keep_path = true);

// Full path with exact alphas (no target).
SolveResult decompose(const WeightedTrigraph& t, int leaf_limit = kDefaultLeafLimit);

// Throws NotInClass unless t is monogamous and bull-free.
void require_in_class(const Trigraph& t);

}  // namespace bullfree
