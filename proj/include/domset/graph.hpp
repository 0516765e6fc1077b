#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domset/mem_audit.hpp"

namespace domset {

// Malformed input (bad file, out-of-range vertex, invalid parameters).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition of an internal contract was broken; indicates either a bug
// or a caller feeding data that violates a structural hypothesis.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Sorted, duplicate-free set of vertex indices. All set algebra is
// merge-based so results stay canonical.
class VertexSet {
public:
    VertexSet() { mem_audit::on_create(); }
    VertexSet(std::initializer_list<int> vs);
    // `members` must already be sorted and duplicate-free.
    explicit VertexSet(std::vector<int> members);

    VertexSet(const VertexSet& other) : members_(other.members_) { mem_audit::on_create(); }
    VertexSet(VertexSet&& other) noexcept : members_(std::move(other.members_)) { mem_audit::on_create(); }
    VertexSet& operator=(const VertexSet&) = default;
    VertexSet& operator=(VertexSet&&) = default;
    ~VertexSet() { mem_audit::on_destroy(); }

    static VertexSet from_unsorted(std::vector<int> vs);
    static VertexSet full(int n); // {0, ..., n-1}

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;
    int max_index() const { return members_.empty() ? -1 : members_.back(); }

    VertexSet with(int v) const;
    VertexSet without(int v) const;
    bool is_subset_of(const VertexSet& other) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    // Lexicographic on the sorted member lists; the canonical order used
    // whenever families of sets are sorted or compared.
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.members_ < b.members_; }

private:
    std::vector<int> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);

// The input graph is outside the class an enumerator was selected for; the
// witness induces the forbidden subgraph.
class ClassViolation : public std::runtime_error {
public:
    ClassViolation(std::string cls, VertexSet witness);
    const std::string& forbidden_subgraph() const { return cls_; }
    const VertexSet& witness() const { return witness_; }

private:
    std::string cls_;
    VertexSet witness_;
};

// Immutable simple undirected graph over dense 0-based vertex indices.
// Adjacency lists are kept sorted; indices drive every deterministic
// tie-break in the library.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Duplicate edges are collapsed; self-loops and out-of-range endpoints
    // raise InputError.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    const std::vector<int>& neighbors(int v) const;
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    std::vector<std::pair<int, int>> edges() const; // (u, v) with u < v, lexicographic

    void check_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

// A graph with a prescribed subset that must be dominated. Vertices outside
// the prescribed set may appear in dominating sets but need no domination.
struct BicoloredGraph {
    Graph graph;
    VertexSet prescribed;

    BicoloredGraph() = default;
    BicoloredGraph(Graph g, VertexSet a);
};

VertexSet closed_neighborhood(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);
VertexSet open_neighborhood(const Graph& g, const VertexSet& x); // N[X] \ X

// Vertices dominated by x and by no other member of s; x must belong to s.
// x can be its own private neighbor.
VertexSet private_neighbors(const Graph& g, const VertexSet& s, int x);

bool dominates(const Graph& g, const VertexSet& d, const VertexSet& a);

// True iff d dominates a and every member of d keeps a private neighbor
// inside a. With a = V this is the classical minimal-dominating-set test.
bool is_minimal_dominating(const Graph& g, const VertexSet& a, const VertexSet& d);

// Recognition report for the graph classes with dedicated enumerators.
// A witness is present exactly when the corresponding flag is false and
// induces the named forbidden subgraph.
struct ClassReport {
    bool triangle_free = true;
    bool diamond_free = true;
    bool paw_free = true;
    std::optional<VertexSet> triangle;
    std::optional<VertexSet> diamond;
    std::optional<VertexSet> paw;
};

// Naive exhaustive scan over 3- and 4-subsets; intended for desk-scale
// inputs where recognition cost is irrelevant.
ClassReport detect_classes(const Graph& g);

// Triangle restricted to the induced subgraph G[a] (the precondition of the
// triangle-free enumerator).
std::optional<VertexSet> find_triangle_within(const Graph& g, const VertexSet& a);

std::string to_string(const VertexSet& s);

} // namespace domset
