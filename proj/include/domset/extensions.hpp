#pragma once

#include <functional>
#include <vector>

#include "domset/graph.hpp"
#include "domset/ordered_gen.hpp"
#include "domset/split_enum.hpp"
#include "domset/stream.hpp"

namespace domset {

// The auxiliary split graph of the triangle-free characterization: built on
// S ∪ C with C = N(S) \ {v_{i+1}} completed into a clique. Vertices are
// relabeled compactly in increasing ambient order; to_ambient maps back.
struct AuxSplitGraph {
    SplitPartition partition;
    std::vector<int> to_ambient;
};

// Requires ctx.s independent (ContractViolation otherwise).
AuxSplitGraph build_aux_split_graph(const ExtensionContext& ctx);

// Per-node counters reported by the triangle-free provider when its stream
// is exhausted: the size of D(H), the number of candidate extensions it
// emitted, and the ambient vertex count.
struct TriangleFreeNodeAudit {
    long long dh_count = 0;
    long long emitted = 0;
    int n = 0;
};
using TriangleFreeAuditSink = std::function<void(const TriangleFreeNodeAudit&)>;

// Candidate extensions when the part of the graph that still needs
// domination is an independent set (ctx.s independent; in particular
// whenever G[A] is triangle-free). Emits exactly C(D*, i), no repeats:
// the candidate pool is {v_{i+1}}, the minimal dominating sets of the
// auxiliary split graph, and their one-vertex augmentations; each candidate
// is membership-tested against the residual prescribed set, and an
// augmented set is kept only when the added vertex has v_{i+1} as its sole
// private neighbor (at most one member of a set can, so nothing repeats).
StreamPtr extensions_triangle_free(const ExtensionContext& ctx, TriangleFreeAuditSink sink = nullptr);

// A sub-enumerator hands back D(G, P) for a prescribed subset P.
using SubEnumerator = std::function<StreamPtr(const Graph&, const VertexSet&)>;

// The general two-case characterization of candidate extensions:
// if v_{i+1} is dominated by D*, C(D*, i) = D(G, S) and the sub-enumerator's
// stream is passed through unchanged; otherwise every candidate is Q ∪ {w}
// for w in N[v_{i+1}] and Q in D(G, S \ N[w]), each tested for membership.
// In the second case a candidate may repeat once per choice of w.
StreamPtr extensions_general(const ExtensionContext& ctx, SubEnumerator recurse);

// Minimal dominating sets of a nonempty clique k ⊆ N(v_center) in a
// diamond-free graph: {v_center}; every singleton from N(v_center) that
// touches k (such vertices are complete to k); and the unordered Cartesian
// products of the per-vertex outside neighborhoods N(x) \ N[v_center],
// which are pairwise disjoint (checked at runtime; overlap means a diamond).
StreamPtr clique_mds(const Graph& g, const VertexSet& k, int v_center);

// Minimal dominating sets of a set w inducing a disjoint union of cliques
// (any subset of S in a diamond-free graph): an inner ordered generation
// whose peeling removes one clique per level, with clique_mds supplying the
// inner candidate extensions and the repetition eliminator on top.
StreamPtr cluster_mds(const Graph& g, const VertexSet& w);

// extensions_general with cluster_mds as the sub-enumerator; may repeat.
StreamPtr extensions_diamond_free(const ExtensionContext& ctx);

// Paw-free candidate extensions, no repeats. If G[S] is edgeless this is
// the independent-set provider above; otherwise G[S] is complete
// multipartite with parts I_1, ..., I_q and every candidate is some I_j or
// has at most two (v_{i+1} dominated) or three (undominated) vertices.
StreamPtr extensions_paw_free(const ExtensionContext& ctx);

} // namespace domset
