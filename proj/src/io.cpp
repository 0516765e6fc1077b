#include "domset/io.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace domset {

GraphFormat parse_format(const std::string& name) {
    if (name == "edges") return GraphFormat::edges;
    if (name == "dimacs") return GraphFormat::dimacs;
    throw InputError("unknown graph format: " + name);
}

int ParsedGraph::vertex_of(const std::string& label) const {
    auto it = index_of.find(label);
    if (it == index_of.end()) throw InputError("unknown vertex label: " + label);
    return it->second;
}

ParsedGraph parsed_from_graph(const Graph& g) {
    ParsedGraph pg;
    pg.graph = g;
    pg.labels.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        pg.labels.push_back(std::to_string(v));
        pg.index_of.emplace(pg.labels.back(), v);
    }
    return pg;
}

namespace {

ParsedGraph parse_edges_format(const std::string& text) {
    ParsedGraph pg;
    std::vector<std::pair<int, int>> edges;
    auto intern = [&pg](const std::string& label) {
        auto it = pg.index_of.find(label);
        if (it != pg.index_of.end()) return it->second;
        int idx = static_cast<int>(pg.labels.size());
        pg.labels.push_back(label);
        pg.index_of.emplace(label, idx);
        return idx;
    };
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (a[0] == '#') continue;
        if (!(ls >> b) || (ls >> extra))
            throw InputError("edges format: expected 'u v' on line " + std::to_string(lineno));
        if (a == b) throw InputError("edges format: self-loop on line " + std::to_string(lineno));
        int ia = intern(a); // sequenced: first token interned first
        int ib = intern(b);
        edges.emplace_back(ia, ib);
    }
    pg.graph = Graph(static_cast<int>(pg.labels.size()), edges);
    return pg;
}

ParsedGraph parse_dimacs_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, lineno = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "c" || kind[0] == '#') continue;
        if (kind == "p") {
            std::string what;
            int m = 0;
            if (!(ls >> what >> n >> m) || what != "edge" || n < 0)
                throw InputError("dimacs: bad problem line at line " + std::to_string(lineno));
            continue;
        }
        if (kind == "e") {
            if (n < 0) throw InputError("dimacs: edge before problem line");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw InputError("dimacs: bad edge line " + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError("dimacs: endpoint outside 1.." + std::to_string(n) + " at line " +
                                 std::to_string(lineno));
            if (u == v) throw InputError("dimacs: self-loop at line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw InputError("dimacs: unrecognized line " + std::to_string(lineno));
    }
    if (n < 0) throw InputError("dimacs: missing problem line");
    ParsedGraph pg;
    pg.graph = Graph(n, edges);
    for (int v = 0; v < n; ++v) {
        pg.labels.push_back(std::to_string(v + 1));
        pg.index_of.emplace(pg.labels.back(), v);
    }
    return pg;
}

} // namespace

ParsedGraph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::edges ? parse_edges_format(text) : parse_dimacs_format(text);
}

std::string serialize_edges(const ParsedGraph& pg) {
    // label-canonical: endpoints ordered by label, lines sorted, so the
    // output is a fixpoint of parse-then-serialize
    std::vector<std::pair<std::string, std::string>> lines;
    for (auto [u, v] : pg.graph.edges()) {
        std::string a = pg.labels[u], b = pg.labels[v];
        if (b < a) std::swap(a, b);
        lines.emplace_back(std::move(a), std::move(b));
    }
    std::sort(lines.begin(), lines.end());
    std::ostringstream os;
    for (const auto& [a, b] : lines) os << a << ' ' << b << '\n';
    return os.str();
}

std::string serialize_dimacs(const ParsedGraph& pg) {
    std::ostringstream os;
    auto edges = pg.graph.edges();
    os << "p edge " << pg.graph.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula f;
    bool got_header = false;
    std::vector<int> current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            std::string what;
            int nc = 0;
            if (!(ls >> what >> f.var_count >> nc) || what != "cnf" || f.var_count < 0)
                throw InputError("cnf: bad problem line");
            got_header = true;
            continue;
        }
        if (!got_header) throw InputError("cnf: clause before problem line");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty()) throw InputError("cnf: empty clause");
                f.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > f.var_count) throw InputError("cnf: literal outside variable range");
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) {
        f.clauses.push_back(current);
    }
    if (!got_header) throw InputError("cnf: missing problem line");
    return f;
}

bool cnf_satisfiable_bruteforce(const CnfFormula& f) {
    const int nv = f.var_count;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << nv); ++m) {
        bool all = true;
        for (const auto& cl : f.clauses) {
            bool sat = false;
            for (int lit : cl) {
                int var = std::abs(lit) - 1;
                bool val = (m >> var) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return f.clauses.empty();
}

ExtensionInstance sat_to_extension_instance(const CnfFormula& f) {
    if (f.clauses.empty()) throw InputError("sat_to_extension_instance: formula has no clauses");
    const int nv = f.var_count;
    const int m = static_cast<int>(f.clauses.size());
    for (const auto& cl : f.clauses) {
        if (cl.empty()) throw InputError("sat_to_extension_instance: empty clause");
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > nv)
                throw InputError("sat_to_extension_instance: literal outside variable range");
    }

    // vertex layout: literals by variable then polarity, then neg vertices,
    // then clause vertices, then u, v, w, z
    auto lit_vertex = [](int lit) {
        return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1;
    };
    auto neg_vertex = [nv](int var) { return 2 * nv + (var - 1); };
    auto clause_vertex = [nv](int j) { return 3 * nv + j; }; // j 0-based
    const int u = 3 * nv + m;
    const int v = u + 1;
    const int w = u + 2;
    const int z = u + 3;
    const int n = 3 * nv + m + 4;

    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= nv; ++i) {
        edges.emplace_back(neg_vertex(i), lit_vertex(i));
        edges.emplace_back(neg_vertex(i), lit_vertex(-i));
    }
    for (int j = 0; j < m; ++j) {
        edges.emplace_back(clause_vertex(j), u);
        for (int lit : f.clauses[j]) edges.emplace_back(clause_vertex(j), lit_vertex(lit));
    }
    edges.emplace_back(u, v);
    edges.emplace_back(v, w);
    edges.emplace_back(w, z);

    ExtensionInstance inst;
    inst.graph = Graph(n, edges);
    std::vector<int> forced;
    for (int i = 1; i <= nv; ++i) forced.push_back(neg_vertex(i));
    forced.push_back(v);
    forced.push_back(w);
    inst.forced = VertexSet::from_unsorted(std::move(forced));
    inst.labels.resize(n);
    for (int i = 1; i <= nv; ++i) {
        inst.labels[lit_vertex(i)] = "x" + std::to_string(i);
        inst.labels[lit_vertex(-i)] = "~x" + std::to_string(i);
        inst.labels[neg_vertex(i)] = "neg_x" + std::to_string(i);
    }
    for (int j = 0; j < m; ++j) inst.labels[clause_vertex(j)] = "y_C" + std::to_string(j + 1);
    inst.labels[u] = "u";
    inst.labels[v] = "v";
    inst.labels[w] = "w";
    inst.labels[z] = "z";
    return inst;
}

namespace {

bool coin(std::mt19937_64& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

void check_probability(double p) {
    if (p < 0.0 || p > 1.0) throw InputError("edge probability outside [0,1]");
}

} // namespace

Graph gen_random_graph(int n, double p, std::uint64_t seed) {
    check_probability(p);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_random_bipartite(int n1, int n2, double p, std::uint64_t seed) {
    check_probability(p);
    if (n1 < 0 || n2 < 0) throw InputError("negative side size");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            if (coin(rng, p)) edges.emplace_back(u, n1 + v);
    return Graph(n1 + n2, edges);
}

Graph gen_random_split(int n, double p, std::uint64_t seed) {
    check_probability(p);
    if (n < 0) throw InputError("negative vertex count");
    std::mt19937_64 rng(seed);
    const int nc = n / 2; // vertices 0..nc-1 form the clique
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nc; ++u)
        for (int v = u + 1; v < nc; ++v) edges.emplace_back(u, v);
    for (int u = 0; u < nc; ++u)
        for (int v = nc; v < n; ++v)
            if (coin(rng, p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    std::vector<int> start;
    for (int s : parts) {
        if (s <= 0) throw InputError("complete_multipartite: part sizes must be positive");
        start.push_back(n);
        n += s;
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = a + 1; b < parts.size(); ++b)
            for (int i = 0; i < parts[a]; ++i)
                for (int j = 0; j < parts[b]; ++j) edges.emplace_back(start[a] + i, start[b] + j);
    return Graph(n, edges);
}

Graph gen_disjoint_cliques(const std::vector<int>& sizes) {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (int s : sizes) {
        if (s <= 0) throw InputError("disjoint_cliques: sizes must be positive");
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) edges.emplace_back(n + i, n + j);
        n += s;
    }
    return Graph(n, edges);
}

Graph gen_random_rejection(const std::string& cls, int n, double p, std::uint64_t seed, int budget) {
    check_probability(p);
    for (int attempt = 0; attempt < budget; ++attempt) {
        Graph g = gen_random_graph(n, p, seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL);
        ClassReport rep = detect_classes(g);
        if (cls == "triangle_free" && rep.triangle_free) return g;
        if (cls == "diamond_free" && rep.diamond_free) return g;
        if (cls == "paw_free" && rep.paw_free) return g;
        if (cls != "triangle_free" && cls != "diamond_free" && cls != "paw_free")
            throw InputError("random_rejection: unknown class " + cls);
    }
    throw InputError("random_rejection: budget exhausted for class " + cls);
}

Graph generate_from_spec(const std::string& spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::vector<std::string> params;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::istringstream ps(rest);
        std::string tok;
        while (std::getline(ps, tok, ','))
            if (!tok.empty()) params.push_back(tok);
    }
    auto as_int = [](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (...) {
            throw InputError("generate: expected integer, got " + s);
        }
    };
    auto as_double = [](const std::string& s) {
        try {
            return std::stod(s);
        } catch (...) {
            throw InputError("generate: expected number, got " + s);
        }
    };
    if (kind == "random_bipartite") {
        if (params.size() == 2) {
            int n = as_int(params[0]);
            return gen_random_bipartite((n + 1) / 2, n / 2, as_double(params[1]), seed);
        }
        if (params.size() == 3)
            return gen_random_bipartite(as_int(params[0]), as_int(params[1]), as_double(params[2]), seed);
        throw InputError("random_bipartite: expected n,p or n1,n2,p");
    }
    if (kind == "random_split") {
        if (params.size() != 2) throw InputError("random_split: expected n,p");
        return gen_random_split(as_int(params[0]), as_double(params[1]), seed);
    }
    if (kind == "complete_multipartite" || kind == "disjoint_cliques") {
        std::vector<int> sizes;
        for (const auto& s : params) sizes.push_back(as_int(s));
        if (sizes.empty()) throw InputError(kind + ": expected part sizes");
        return kind == "complete_multipartite" ? gen_complete_multipartite(sizes)
                                               : gen_disjoint_cliques(sizes);
    }
    if (kind == "random_rejection") {
        if (params.size() != 3) throw InputError("random_rejection: expected class,n,p");
        return gen_random_rejection(params[0], as_int(params[1]), as_double(params[2]), seed);
    }
    if (kind == "random") {
        if (params.size() != 2) throw InputError("random: expected n,p");
        return gen_random_graph(as_int(params[0]), as_double(params[1]), seed);
    }
    throw InputError("generate: unknown kind " + kind);
}

} // namespace domset
