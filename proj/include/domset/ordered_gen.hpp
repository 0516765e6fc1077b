#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "domset/graph.hpp"
#include "domset/peeling.hpp"
#include "domset/stream.hpp"

namespace domset {

// Everything a candidate-extension enumerator needs about the node
// (d_star, level) of the parent tree it is asked to expand.
//
// s = V_{level+1} \ (N[d_star] ∪ {v_{level+1}}) is the part of the next
// peeling slice still to be dominated, apart from the peeled vertex itself;
// it is always a subset of N(v_{level+1}).
struct ExtensionContext {
    std::shared_ptr<const BicoloredGraph> bg;
    std::shared_ptr<const Peeling> peel;
    int level = 0; // i, in [0, p-1]
    VertexSet d_star;
    VertexSet s;
    bool next_vertex_dominated = false; // v_{i+1} in N[d_star]?

    const Graph& graph() const { return bg->graph; }
    int next_vertex() const { return peel->peel_vertex(level + 1); } // v_{i+1}
    const VertexSet& next_level() const { return peel->level(level + 1); } // V_{i+1}
    // The prescribed set defining C(d_star, level): V_{i+1} \ N[d_star].
    VertexSet residual() const { return next_vertex_dominated ? s : s.with(next_vertex()); }
};

ExtensionContext make_extension_context(std::shared_ptr<const BicoloredGraph> bg,
                                        std::shared_ptr<const Peeling> peel, int level,
                                        VertexSet d_star);

// Produces a stream over the candidate extensions C(d_star, i), i.e. the
// minimal dominating sets of G with prescribed set V_{i+1} \ N[d_star].
using ExtensionProvider = std::function<StreamPtr(const ExtensionContext&)>;

// The parent of (d, i): repeatedly delete from d the smallest-index vertex
// whose private neighbors miss V_{i-1}; the result minimally dominates
// V_{i-1}. Requires d in D(G, V_i), else ContractViolation.
std::pair<VertexSet, int> parent(const BicoloredGraph& bg, const Peeling& p, const VertexSet& d, int i);

// True iff d_child in D(G, V_i) and parent(d_child, i) == (d_star, i-1).
bool check_parent(const BicoloredGraph& bg, const Peeling& p, const VertexSet& d_child, int i,
                  const VertexSet& d_star);

// Test hook: notified when a node's extension stream is exhausted, with the
// number of extensions it produced.
struct OrderedGenObserver {
    virtual ~OrderedGenObserver() = default;
    virtual void node_finished(int level, const VertexSet& d_star, long long produced) = 0;
};

// The generic ordered-generation engine. Walks the parent tree rooted at
// ({}, 0) depth-first, expanding each node through the provider and keeping
// one paused extension cursor per tree depth; emits exactly D(G, A), each
// set once. A = {} short-circuits to the single solution {} before any
// peeling is computed.
StreamPtr enumerate_ordered(BicoloredGraph bg, ExtensionProvider provider,
                            OrderedGenObserver* observer = nullptr);

// Repetition eliminator: emits every distinct set of the inner stream at its
// first occurrence, holding at most two live inner cursors (one main run and
// one bounded verification replay per emission; no solution cache). Raises
// ContractViolation when the replay diverges from the main run.
StreamPtr dedup(StreamPtr inner);

} // namespace domset
