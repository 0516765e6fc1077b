#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

enum class GraphFormat { edges, dimacs };

GraphFormat parse_format(const std::string& name);

// A graph together with the original vertex labels. Enumeration works on
// dense indices; the CLI maps back through this table.
struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index_of;

    int vertex_of(const std::string& label) const;
};

ParsedGraph parsed_from_graph(const Graph& g); // labels "0".."n-1"

// edges format: one "u v" pair per line, arbitrary whitespace-free labels,
// mapped to dense indices in first-appearance order; '#' starts a comment
// line. dimacs format: "p edge n m" header then 1-based "e u v" lines.
// Duplicate edges collapse; self-loops are rejected.
ParsedGraph parse_graph(const std::string& text, GraphFormat format);

std::string serialize_edges(const ParsedGraph& pg);
std::string serialize_dimacs(const ParsedGraph& pg);

// ---------------------------------------------------------------------------
// SAT reduction (hardness-instance generator)

struct CnfFormula {
    int var_count = 0;
    std::vector<std::vector<int>> clauses; // nonzero literals, sign = polarity
};

CnfFormula parse_dimacs_cnf(const std::string& text);

bool cnf_satisfiable_bruteforce(const CnfFormula& f);

// The bipartite extension instance built from a CNF formula: literal
// vertices, one neg vertex per variable, one vertex per clause adjacent to
// u and to its literals, and the path u-v-w-z. The forced set is
// {neg_x1, ..., neg_xn, v, w}; it extends to a minimal dominating set iff
// the formula is satisfiable.
struct ExtensionInstance {
    Graph graph;
    VertexSet forced;
    std::vector<std::string> labels;
};

ExtensionInstance sat_to_extension_instance(const CnfFormula& f);

// ---------------------------------------------------------------------------
// Instance generators (deterministic for a fixed seed)

Graph gen_random_graph(int n, double p, std::uint64_t seed);
Graph gen_random_bipartite(int n1, int n2, double p, std::uint64_t seed);
Graph gen_random_split(int n, double p, std::uint64_t seed);
Graph gen_complete_multipartite(const std::vector<int>& parts);
Graph gen_disjoint_cliques(const std::vector<int>& sizes);
// Resamples G(n, p) until detect_classes accepts the requested class
// ("triangle_free", "diamond_free" or "paw_free"); InputError when the
// attempt budget runs out.
Graph gen_random_rejection(const std::string& cls, int n, double p, std::uint64_t seed,
                           int budget = 10000);

// "kind:params" dispatcher used by the CLI, e.g. "random_bipartite:6,0.5",
// "complete_multipartite:2,2", "disjoint_cliques:3,3",
// "random_rejection:paw_free,8,0.3".
Graph generate_from_spec(const std::string& spec, std::uint64_t seed);

} // namespace domset
