#pragma once

#include "domset/extensions.hpp"
#include "domset/graph.hpp"
#include "domset/ordered_gen.hpp"
#include "domset/stream.hpp"

namespace domset {

struct GeneralOptions {
    // Switch to the independent-S provider whenever the prescribed set
    // induces a triangle-free subgraph, instead of recursing further down.
    // Off by default so the reference behavior matches the plain mutual
    // recursion.
    bool triangle_free_base = false;
};

// D(G, A) for G[A] triangle-free; ClassViolation with a witness otherwise.
StreamPtr enum_mds_triangle_free(const BicoloredGraph& bg, TriangleFreeAuditSink audit = nullptr,
                                 OrderedGenObserver* observer = nullptr);

// D(G, A) for arbitrary bicolored graphs. Ordered generation whose
// candidate extensions recurse into this same enumerator on smaller
// prescribed sets, wrapped in the repetition eliminator. The recursion
// bottoms out at A = {}.
StreamPtr enum_mds_general(const BicoloredGraph& bg, GeneralOptions opts = {},
                           OrderedGenObserver* observer = nullptr);

// All maximal independent sets, polynomial delay, no repeats. Reverse
// search over the vertex-by-vertex extension tree with canonical parents.
StreamPtr enum_maximal_independent_sets(const Graph& g);

// D(G) for (K_t + K_2)-free graphs (correct on every graph; the class only
// affects the complexity bound). Maximal independent sets first, then per
// edge uv the sets inducing uv as their lexicographically smallest edge,
// the whole stream deduplicated.
StreamPtr enum_mds_kt_plus_k2(const Graph& g);

// D(G, A) for diamond-free G; ClassViolation with a witness otherwise.
StreamPtr enum_mds_diamond_free(const BicoloredGraph& bg, OrderedGenObserver* observer = nullptr);

// D(G, A) for paw-free G; ClassViolation with a witness otherwise.
StreamPtr enum_mds_paw_free(const BicoloredGraph& bg, OrderedGenObserver* observer = nullptr);

} // namespace domset
