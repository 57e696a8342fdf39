#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bullfree/errors.hpp"
#include "bullfree/vertex_set.hpp"

namespace bullfree {

using Weight = std::int64_t;

// Values of the adjacency function.
inline constexpr int kStrongAntiedge = -1;
inline constexpr int kSwitchable = 0;
inline constexpr int kStrongEdge = 1;

using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair ordered_pair(Vertex u, Vertex v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }

// A vertex set with a symmetric adjacency function into {-1, 0, +1}.
// Vertices are 0..n-1; labels are kept only for I/O.
class Trigraph {
public:
    Trigraph() = default;
    explicit Trigraph(int n);

    int size() const { return n_; }

    int theta(Vertex u, Vertex v) const { return theta_[static_cast<std::size_t>(u) * n_ + v]; }
    void set(Vertex u, Vertex v, int value);

    bool strongly_adjacent(Vertex u, Vertex v) const { return theta(u, v) == kStrongEdge; }
    bool strongly_antiadjacent(Vertex u, Vertex v) const { return theta(u, v) == kStrongAntiedge; }
    bool switchable(Vertex u, Vertex v) const { return u != v && theta(u, v) == kSwitchable; }
    bool adjacent(Vertex u, Vertex v) const { return u != v && theta(u, v) >= 0; }
    bool antiadjacent(Vertex u, Vertex v) const { return u != v && theta(u, v) <= 0; }

    // eta(v), sigma(v), nu(v) and the (weak) neighbourhood N(v) = eta(v) | sigma(v).
    const VertexSet& strong_neighbors(Vertex v) const { return strong_[v]; }
    const VertexSet& switchable_neighbors(Vertex v) const { return switch_[v]; }
    VertexSet neighbors(Vertex v) const { return strong_[v] | switch_[v]; }
    VertexSet strong_antineighbors(Vertex v) const;
    VertexSet antineighbors(Vertex v) const;

    // Switchable pairs (u < v), lexicographic.
    std::vector<VertexPair> switchable_pairs() const;
    std::vector<VertexPair> strong_edges() const;
    bool is_graph() const;

    std::string label(Vertex v) const;
    bool has_labels() const { return !labels_.empty(); }
    void set_labels(std::vector<std::string> labels);
    const std::vector<std::string>& labels() const { return labels_; }

    // Adds an isolated vertex (strongly antiadjacent to everything).
    Vertex add_vertex(std::string label = {});

    // Structural equality; labels are ignored.
    bool operator==(const Trigraph& o) const { return n_ == o.n_ && theta_ == o.theta_; }

private:
    int n_ = 0;
    std::vector<std::int8_t> theta_;
    std::vector<VertexSet> strong_;
    std::vector<VertexSet> switch_;
    std::vector<std::string> labels_;
};

// One entry of a raw adjacency description, before it becomes a Trigraph.
struct PairValue {
    Vertex u;
    Vertex v;
    int value;
};

struct Violation {
    enum class Kind { SelfPair, OutOfRange, VertexOutOfRange, Asymmetric };
    Kind kind;
    Vertex u;
    Vertex v;
    std::string message;
};

// Checks a raw list of adjacency values: no self pairs, values in {-1,0,1},
// and an unordered pair listed twice must carry the same value both times.
// Unlisted pairs are strong antiedges.
std::optional<Violation> validate(int n, std::span<const PairValue> entries);
std::optional<Violation> validate(const Trigraph& t);

// Builds a trigraph, throwing InputError with the first violation.
Trigraph make_trigraph(int n, std::span<const PairValue> entries);
Trigraph make_graph(int n, std::span<const VertexPair> edges);

bool is_monogamous(const Trigraph& t);
// The first vertex lying in two switchable pairs, if any.
std::optional<Vertex> polygamous_vertex(const Trigraph& t);

Trigraph complement(const Trigraph& t);

// T[X]. Vertex i of the result is vs[i] of t (vs is taken in the given order).
Trigraph induce(const Trigraph& t, std::span<const Vertex> vs);
Trigraph induce(const Trigraph& t, const VertexSet& x);

// Roles of a bull: x1 x2 x3 pairwise adjacent, y adjacent to x1 only,
// z adjacent to x2 only, y and z antiadjacent.
struct BullWitness {
    Vertex x1, x2, x3, y, z;
    std::array<Vertex, 5> vertices() const { return {x1, x2, x3, y, z}; }
};

bool is_bull(const Trigraph& t, const BullWitness& w);
std::optional<BullWitness> find_bull(const Trigraph& t);
// Bull containing vertex v, if any.
std::optional<BullWitness> find_bull_through(const Trigraph& t, Vertex v);

// G^T_S: pairs in `as_edges` become strong edges, other switchable pairs
// strong antiedges. Throws InputError if a listed pair is not switchable.
Trigraph realization(const Trigraph& t, std::span<const VertexPair> as_edges);
Trigraph full_realization(const Trigraph& t);
// Every switchable pair becomes a strong antiedge.
Trigraph antiedge_realization(const Trigraph& t);

bool is_stable(const Trigraph& t, std::span<const Vertex> s);
bool is_strong_clique(const Trigraph& t, std::span<const Vertex> s);

Weight checked_add(Weight a, Weight b);

// A monogamous-friendly weighted trigraph: weights on vertices and on
// switchable pairs.
class WeightedTrigraph {
public:
    WeightedTrigraph() = default;
    // Unit vertex weights; switchable pairs get the default weight.
    explicit WeightedTrigraph(Trigraph t);
    WeightedTrigraph(Trigraph t, std::vector<Weight> vertex_weights);

    const Trigraph& base() const { return base_; }
    int size() const { return base_.size(); }

    Weight weight(Vertex v) const { return vertex_weight_[v]; }
    void set_weight(Vertex v, Weight w);
    Weight pair_weight(Vertex u, Vertex v) const;
    void set_pair_weight(Vertex u, Vertex v, Weight w);
    const std::map<VertexPair, Weight>& pair_weights() const { return pair_weight_; }
    const std::vector<Weight>& vertex_weights() const { return vertex_weight_; }

    // Changes the adjacency of u,v; pair weights follow the switchable set
    // (a new switchable pair gets `pair_w`).
    void set_theta(Vertex u, Vertex v, int value, Weight pair_w = 0);
    Vertex add_vertex(Weight w, std::string label = {});
    void set_labels(std::vector<std::string> labels) { base_.set_labels(std::move(labels)); }

    // max(w(a), w(b)) <= w(ab) <= w(a) + w(b) for all switchable ab, and
    // no negative weight. Returns the first failure as text.
    std::optional<std::string> check_weights() const;
    Weight total_weight() const;

    bool operator==(const WeightedTrigraph& o) const = default;

private:
    Trigraph base_;
    std::vector<Weight> vertex_weight_;
    std::map<VertexPair, Weight> pair_weight_;
};

// Default weight of a switchable pair: max(w(u), w(v)), raised to 2 when both
// endpoints weigh at least 1.
Weight default_pair_weight(Weight wu, Weight wv);

WeightedTrigraph induce(const WeightedTrigraph& t, std::span<const Vertex> vs);
WeightedTrigraph induce(const WeightedTrigraph& t, const VertexSet& x);

// Weight of stable set S: vertex weights of c(S) plus pair weights of sigma(S).
// Throws InputError if S is not stable or t is not monogamous.
Weight stable_set_weight(const WeightedTrigraph& t, std::span<const Vertex> s);

enum class EliminationMode { ATowardsStable, BTowardsStable, ATowardsClique, BTowardsClique };
const char* to_string(EliminationMode m);
inline constexpr std::array<EliminationMode, 4> kAllEliminationModes = {
    EliminationMode::ATowardsStable, EliminationMode::BTowardsStable, EliminationMode::ATowardsClique,
    EliminationMode::BTowardsClique};

// Replaces switchable pair ab by a strong edge and adds a clone of a (or b)
// as the last vertex, keeping the maximum stable set weight.
WeightedTrigraph eliminate_switchable(const WeightedTrigraph& t, Vertex a, Vertex b, EliminationMode mode);

}  // namespace bullfree
