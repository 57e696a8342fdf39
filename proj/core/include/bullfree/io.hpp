#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "bullfree/trigraph.hpp"

namespace bullfree {

// Line-oriented, 1-indexed text format:
//   p tri <n>          header (plain DIMACS "p edge <n> <m>" is accepted too)
//   e u v              strong edge
//   s u v              switchable pair
//   w v <int>          vertex weight, default 1
//   ws u v <int>       switchable pair weight, default_pair_weight()
//   k <int>            optional target carried by oracle query files
//   c ...              comment; "c label v <name>" names vertex v
// Unlisted pairs are strong antiedges.
struct Instance {
    WeightedTrigraph trigraph;
    std::optional<Weight> target;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance read_instance(const std::filesystem::path& path);

// Canonical output: every vertex weight, then edges, pairs and pair
// weights in lexicographic order. Identical inputs give identical bytes.
void write_instance(std::ostream& out, const WeightedTrigraph& t, std::optional<Weight> target = std::nullopt);
std::string to_text(const WeightedTrigraph& t, std::optional<Weight> target = std::nullopt);
void write_instance_file(const std::filesystem::path& path, const WeightedTrigraph& t,
                         std::optional<Weight> target = std::nullopt);

}  // namespace bullfree
