#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bullfree/solver.hpp"

namespace bullfree {

// A decision question "alpha(instance) >= target?" handed to the oracle. The
// question comes as a weighted trigraph and, when its switchable pairs can be
// eliminated without creating a bull, also as an unweighted graph with the
// same alpha. Leaves of graph inputs always have the graph form.
struct OracleQuery {
    int id = 0;
    AlphaRequest::Role role = AlphaRequest::Role::Leaf;
    WeightedTrigraph trigraph;
    std::optional<Trigraph> graph;
    Weight target = 1;
};

using Oracle = std::function<bool(const OracleQuery&)>;

struct QueryRecord {
    OracleQuery query;
    bool answer = false;
};

struct KernelTranscript {
    Weight k = 0;
    std::vector<QueryRecord> queries;
    SolveResult final;
};

// The oracle contradicted itself or the instance.
class OracleInconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Runs the decomposition, answering every alpha that cannot be had by
// enumeration with descending decision queries (k, k-1, ...). A YES answer
// at target k decides the run. Exact results carry the weight; a witness
// only when no query was needed.
struct KernelOptions {
    // Try enumeration with the n^3 cutoff before querying instances that are
    // small enough to be sent. Turning it off sends every such instance.
    bool local_enumeration = true;
};
KernelTranscript solve_with_oracle(const WeightedTrigraph& t, Weight k, const Oracle& oracle,
                                   const KernelOptions& opt = {});

// Decides queries with the exact leaf solver on the trigraph form.
Oracle exact_oracle();
// Decides queries with the exact leaf solver on the unweighted graph form
// (the trigraph form when there is no graph form).
Oracle exact_graph_oracle();
// Returns recorded answers in order; throws OracleInconsistency when they run out.
Oracle replay_oracle(std::vector<bool> answers);

// Removes every switchable pair by the first of a->S, b->S, a->K, b->K that
// keeps the trigraph bull-free. `modes` receives the chosen transform per
// pair. Throws NotInClass if all four create a bull.
WeightedTrigraph trigraph_leaf_to_graph(const WeightedTrigraph& leaf, std::vector<EliminationMode>* modes = nullptr);

// Replaces each vertex of weight w by a strong stable set of w vertices
// (weight-0 vertices disappear). Requires a graph with all weights < k.
Trigraph unweight(const WeightedTrigraph& g, Weight k);

}  // namespace bullfree
