#pragma once

#include <vector>

#include "bullfree/trigraph.hpp"

namespace bullfree {

struct ColorAssignment {
    std::vector<int> colour;  // per vertex, 0-based
    int palette = 0;          // number of distinct colours used
};

// Largest-degree-first greedy proper colouring of the strong edges.
ColorAssignment greedy_coloring(const Trigraph& g);
bool is_proper_coloring(const Trigraph& g, const std::vector<int>& colour);

// A colouring in which no maximal clique on two or more vertices is
// monochromatic, built along homogeneous sets and pairs with greedy proper
// colourings at the leaves. Components are coloured independently.
// Requires a bull-free graph (InputError for switchable pairs, NotInClass for
// a bull).
ColorAssignment semicolor(const Trigraph& g);

// Proper colouring obtained by splitting colour classes of semicolourings
// until every class is triangle-free, then colouring each class greedily.
// `levels` receives the number of semicolouring rounds.
ColorAssignment chi_color(const Trigraph& g, int* levels = nullptr);

int clique_number(const Trigraph& g);

}  // namespace bullfree
