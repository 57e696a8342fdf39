#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bullfree/decomposition.hpp"
#include "bullfree/trigraph.hpp"

namespace bullfree::testkit {

// Ground-truth maximum weight stable set by enumerating every stable set.
struct BruteAlpha {
    Weight weight = 0;
    std::vector<Vertex> set;
};
inline constexpr int kBruteAlphaLimit = 20;
BruteAlpha brute_alpha(const WeightedTrigraph& t, int limit = kBruteAlphaLimit);

// Every homogeneous set and every homogeneous pair (A, B) with min(A u B)
// in A, by exhaustive search.
struct BruteCuts {
    std::vector<std::vector<Vertex>> homogeneous_sets;
    std::vector<Split> small_pairs;
    std::vector<Split> proper_pairs;
    bool empty() const { return homogeneous_sets.empty() && small_pairs.empty() && proper_pairs.empty(); }
};
inline constexpr int kBruteCutsLimit = 10;
BruteCuts brute_cuts(const Trigraph& t, int limit = kBruteCutsLimit);

// mt19937_64 with a fixed, platform independent reduction to ranges (plain
// rejection sampling), so seeds give the same instances everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    // Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool chance(double p);
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(0, static_cast<std::int64_t>(i) - 1)]);
    }

private:
    std::mt19937_64 eng_;
};

enum class GenModel { Reject, T1Style, T1Complement, CompleteSum, Substitution, PairExpansion };
const char* to_string(GenModel m);
std::optional<GenModel> parse_model(const std::string& s);

struct GenSpec {
    GenModel model = GenModel::Reject;
    int n = 10;
    std::uint64_t seed = 1;
    Weight weight_min = 1;
    Weight weight_max = 1;
    double density = 0.5;      // edge probability where it applies
    double switchable = 0.0;   // chance that a vertex gets a switchable pair
    int parts = 2;             // summands / substituted blocks
};

// A bull-free monogamous instance. Same spec, same instance. Throws
// std::runtime_error if the resample budget runs out.
WeightedTrigraph generate(const GenSpec& spec);

// Corpus manifest: a spec plus a seed list, as JSON.
struct Manifest {
    GenSpec spec;
    std::vector<std::uint64_t> seeds;
};
std::string manifest_to_json(const Manifest& m);
Manifest manifest_from_json(const std::string& text);
std::string spec_to_json(const GenSpec& s);

// Maximal cliques of a graph (switchable pairs count as non-edges), by
// Bron-Kerbosch with pivoting.
std::vector<std::vector<Vertex>> maximal_cliques(const Trigraph& g);

inline constexpr int kSemicoloringLimit = 60;
// First maximal clique with at least two vertices whose vertices all share
// a colour. Throws SizeLimitExceeded above the limit.
std::optional<std::vector<Vertex>> check_semicoloring(const Trigraph& g, const std::vector<int>& colour,
                                                      int limit = kSemicoloringLimit);

}  // namespace bullfree::testkit
