#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bullfree/trigraph.hpp"

namespace bullfree {

// (A, B, C, D, E, F) for a homogeneous pair (A, B). All parts sorted.
//   A strongly complete to C u E, strongly anticomplete to D u F
//   B strongly complete to D u E, strongly anticomplete to C u F
struct Split {
    std::vector<Vertex> a, b, c, d, e, f;

    bool proper() const { return !c.empty() && !d.empty(); }
    bool small() const { return a.size() + b.size() <= 6; }
    std::vector<Vertex> x() const;  // A u B, sorted
    bool operator==(const Split&) const = default;
};

enum class CutKind { HomogeneousSet, ProperPair, SmallPair };
const char* to_string(CutKind k);

// A partition (X, Y) of the vertex set. For pair kinds X = A u B and
// `split` is set.
struct Cut {
    CutKind kind;
    std::vector<Vertex> x;
    std::vector<Vertex> y;
    std::optional<Split> split;

    bool is_pair() const { return kind != CutKind::HomogeneousSet; }
    bool operator==(const Cut&) const = default;
};

bool check_homogeneous_set(const Trigraph& t, const VertexSet& x);
bool check_homogeneous_set(const Trigraph& t, std::span<const Vertex> x);

// Classifies the outside of (A, B). Returns nullopt unless (A, B) is a
// homogeneous pair: outside vertices strongly uniform to A and to B (a
// switchable pair leaving A u B disqualifies), A neither strongly complete
// nor strongly anticomplete to B, |A u B| >= 3 and at least 3 outside.
std::optional<Split> derive_split(const Trigraph& t, std::span<const Vertex> a, std::span<const Vertex> b);

// Minimal homogeneous set containing r0 (which must contain a and b), or
// nullopt when none exists.
std::optional<VertexSet> forcing_hs(const Trigraph& t, Vertex a, Vertex b, const VertexSet& r0);

struct ProperTuple {
    Vertex a, b, c, d;
};
// ac, bd strong edges; bc, ad strong antiedges.
bool is_proper_tuple(const Trigraph& t, const ProperTuple& z);

struct PairForcingResult {
    enum class Status {
        Found,       // (a_side, b_side) is a proper homogeneous pair compatible with z
        NoPair,      // no proper homogeneous pair compatible with z contains r0
        Degenerate,  // closure converged, but A is strongly complete or anticomplete to B
    };
    Status status;
    std::vector<Vertex> a_side;
    std::vector<Vertex> b_side;
};

// Forcing closure for homogeneous pairs compatible with z. Requires z proper,
// |r0| >= 3 and r0 n {a,b,c,d} = {a,b}; otherwise throws InputError.
// A Found result is contained in every proper pair compatible with z that
// covers r0. Degenerate marks the case where the forced set is homogeneous
// towards the outside but its two sides are strongly complete or
// anticomplete; one side is then a homogeneous set of t.
PairForcingResult forcing_hp(const Trigraph& t, const ProperTuple& z, const VertexSet& r0);

// Some small homogeneous pair, or nullopt if there is none. The result is
// the first one met by a deterministic search; A holds min(A u B).
std::optional<Split> find_small_pair(const Trigraph& t);

// A small homogeneous pair if one exists, else a minimally-sided homogeneous
// cut (minimum |X|, then lexicographically least X, homogeneous sets before
// pairs), else nullopt.
std::optional<Cut> find_min_cut(const Trigraph& t);

enum class MarkerRole { X, A, B, C, D };
const char* to_string(MarkerRole r);

struct Marker {
    Vertex vertex;                  // index in the block
    MarkerRole role;
    std::vector<Vertex> summarizes;  // parent vertices it stands for
};

struct Block {
    enum class Side { X, Y };
    Side side;
    WeightedTrigraph trigraph;
    std::vector<Vertex> origin;  // parent vertex per block vertex, -1 for a new marker
    std::vector<Marker> markers;

    const Marker* marker(MarkerRole r) const;
};

// T_X. Homogeneous sets and small pairs give T[X]; proper pairs add c
// (complete to A) and d (complete to B) with cd switchable. Marker weights
// are w(c) = w(d) = 1, w(cd) = 2.
Block block_x(const WeightedTrigraph& t, const Cut& cut);

// Maximum stable set weights of the X side that T_Y needs.
struct SideAlphas {
    Weight x = 0;   // alpha(T[X]) for a homogeneous set
    Weight a = 0;   // alpha(T[A])
    Weight b = 0;   // alpha(T[B])
    Weight ab = 0;  // alpha(T[A u B])
};

// T_Y. A homogeneous set keeps its smallest vertex as marker x of weight
// alphas.x; a pair is replaced by markers a, b (appended last) with
// ab switchable and weights alphas.a, alphas.b, alphas.ab.
Block block_y(const WeightedTrigraph& t, const Cut& cut, const SideAlphas& alphas);

}  // namespace bullfree
