#pragma once

#include "domset/graph.hpp"
#include "domset/stream.hpp"

namespace domset {

// A split graph given by its partition: s independent, c a clique, together
// covering all vertices of the ambient graph, with s inclusion-wise maximal
// (every clique vertex has a neighbor in s).
struct SplitPartition {
    Graph graph;
    VertexSet s;
    VertexSet c;
};

// Normalizes (s, c) to the maximal-s form by moving clique vertices with no
// neighbor in s over to s, in increasing index order (so of two s-isolated,
// mutually adjacent clique vertices only the smaller one moves). Raises
// InputError when (s, c) is not a split partition of g.
SplitPartition maximalize_split(const Graph& g, const VertexSet& s, const VertexSet& c);

// Enumerates all minimal dominating sets of the split graph, no repeats,
// with O(n^2) delay and O(n^2) working space.
//
// Every output is X union (s \ N(X)) for the subsets X of c in which each
// member keeps a private neighbor inside s; that family is downward closed,
// so a binary backtracker over c (subsets in counter order, bit j = j-th
// clique vertex) visits exactly the valid X with no dead branches.
StreamPtr enumerate_split_mds(const SplitPartition& sp);

} // namespace domset
