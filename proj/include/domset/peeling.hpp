#pragma once

#include <vector>

#include "domset/graph.hpp"

namespace domset {

// A peeling of a bicolored graph G(A): the sequence V_0, ..., V_p with
// V_p = A, V_0 = {} and V_{i-1} = V_i \ N[v_i] for the vertex sequence
// v_1, ..., v_p. Consequently v_i has no neighbor in V_{i-1} and the slices
// N[v_i] cap V_i partition A.
struct Peeling {
    std::vector<VertexSet> levels;    // levels[i] = V_i, i in [0, p]
    std::vector<int> vertex_sequence; // vertex_sequence[i-1] = v_i, i in [1, p]

    int depth() const { return static_cast<int>(vertex_sequence.size()); } // p
    const VertexSet& level(int i) const { return levels.at(i); }
    int peel_vertex(int i) const { return vertex_sequence.at(i - 1); } // v_i
};

// Deterministic construction: at each step the peeled vertex is the
// smallest-index vertex of the current residual set. A = {} yields p = 0.
Peeling compute_peeling(const BicoloredGraph& bg);

// Checks every Peeling invariant against bg.
bool validate_peeling(const BicoloredGraph& bg, const Peeling& p);

} // namespace domset
