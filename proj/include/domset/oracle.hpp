#pragma once

#include <vector>

#include "domset/graph.hpp"

namespace domset {

inline constexpr int kOracleDefaultCap = 22;

// Brute-force ground truth: all minimal dominating sets of G(A), computed by
// scanning every vertex subset. Refuses graphs above the cap. The returned
// family is sorted lexicographically.
//
// The production kernel walks subsets in Gray-code order with incremental
// domination/private counters and splits the subset range across OpenMP
// threads. oracle_mds_serial is the straightforward per-subset recomputation
// kept as a reference; the two must agree bit for bit.
std::vector<VertexSet> oracle_mds(const Graph& g, const VertexSet& a, int cap = kOracleDefaultCap);
std::vector<VertexSet> oracle_mds(const BicoloredGraph& bg, int cap = kOracleDefaultCap);

std::vector<VertexSet> oracle_mds_serial(const Graph& g, const VertexSet& a, int cap = kOracleDefaultCap);

// Extension feasibility: is there a minimal dominating set of G (prescribed
// set = V) containing a? Scans exactly the supersets of a.
bool oracle_extension(const Graph& g, const VertexSet& a, int cap = kOracleDefaultCap);

} // namespace domset
