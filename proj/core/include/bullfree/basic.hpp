#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bullfree/trigraph.hpp"

namespace bullfree {

// g(x) = C(x+1, 2) - 1, an upper bound on R(3, x) - 1.
Weight g_bound(Weight x);
// f(x) = g(x) + (x-1) * (C(g(x), 2) + 2 g(x) + 1).
// Both throw WeightOverflow when the value does not fit and InputError for x < 1.
Weight f_bound(Weight x);

// Maximal stable sets of the realization where every switchable pair is an
// antiedge (these are exactly the maximal stable sets of t). The visitor
// returns false to stop early. Returns the number of sets visited, stopping
// after cutoff + 1 sets.
std::int64_t for_each_max_stable(const Trigraph& t, std::int64_t cutoff,
                                 const std::function<bool(const std::vector<Vertex>&)>& visit);

struct Enumeration {
    bool too_many = false;
    std::vector<std::vector<Vertex>> sets;  // in generation order; empty when too_many
};
Enumeration enumerate_max_stable(const Trigraph& t, std::int64_t cutoff);

struct StableSolution {
    std::vector<Vertex> set;  // sorted
    Weight weight = 0;
};

inline constexpr int kDefaultLeafLimit = 120;

// Maximum weight stable set by branch and bound. If stop_at is given the
// search ends as soon as a set of weight >= *stop_at is found (that set is
// returned). Throws SizeLimitExceeded above `limit` vertices.
StableSolution exact_leaf_mwis(const WeightedTrigraph& t, std::optional<Weight> stop_at = std::nullopt,
                               int limit = kDefaultLeafLimit);

// Heaviest set among the maximal stable sets of t, or nullopt when there are
// more than cutoff of them.
std::optional<StableSolution> best_enumerated(const WeightedTrigraph& t, std::int64_t cutoff);

std::int64_t cube_cutoff(int n);

struct LeafOutcome {
    enum class Tag { SmallEnough, FewMaximalSets, AlphaAtLeastW };
    Tag tag;
    std::optional<StableSolution> best;  // FewMaximalSets only
};
const char* to_string(LeafOutcome::Tag t);

// Requires vertex weights >= 1, switchable pair weights >= 2 (InputError
// otherwise). n <= f(W) gives SmallEnough; otherwise enumeration with cutoff
// n^3 gives FewMaximalSets; otherwise AlphaAtLeastW. The last outcome is only
// guaranteed for trigraphs without homogeneous sets in the basic classes.
LeafOutcome classify_leaf(const WeightedTrigraph& t, Weight w);

}  // namespace bullfree
