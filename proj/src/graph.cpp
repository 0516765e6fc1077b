#include "domset/graph.hpp"

#include <algorithm>
#include <sstream>

namespace domset {

VertexSet::VertexSet(std::initializer_list<int> vs) : members_(vs) {
    mem_audit::on_create();
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
    mem_audit::on_create();
    for (size_t i = 1; i < members_.size(); ++i) {
        if (members_[i - 1] >= members_[i])
            throw ContractViolation("VertexSet: members not sorted/unique");
    }
}

VertexSet VertexSet::from_unsorted(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    VertexSet out;
    out.members_ = std::move(vs);
    return out;
}

VertexSet VertexSet::full(int n) {
    VertexSet out;
    out.members_.resize(n);
    for (int i = 0; i < n; ++i) out.members_[i] = i;
    return out;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::with(int v) const {
    if (contains(v)) return *this;
    VertexSet out;
    out.members_.reserve(members_.size() + 1);
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    out.members_.insert(out.members_.end(), members_.begin(), it);
    out.members_.push_back(v);
    out.members_.insert(out.members_.end(), it, members_.end());
    return out;
}

VertexSet VertexSet::without(int v) const {
    VertexSet out;
    out.members_.reserve(members_.size());
    for (int m : members_)
        if (m != v) out.members_.push_back(m);
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    out.reserve(a.members().size() + b.members().size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    out.reserve(a.members().size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

ClassViolation::ClassViolation(std::string cls, VertexSet witness)
    : std::runtime_error("graph is not " + cls + "-free: witness " + to_string(witness)),
      cls_(std::move(cls)),
      witness_(std::move(witness)) {}

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw InputError("Graph: negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw InputError("Graph: edge endpoint out of range");
        if (u == v) throw InputError("Graph: self-loop rejected");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& lst : adj_) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& lst : adj_) twice += static_cast<int>(lst.size());
    return twice / 2;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& lst = adj_[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex index out of range: " + std::to_string(v));
}

BicoloredGraph::BicoloredGraph(Graph g, VertexSet a) : graph(std::move(g)), prescribed(std::move(a)) {
    if (!prescribed.empty() && prescribed.max_index() >= graph.vertex_count())
        throw InputError("BicoloredGraph: prescribed set not within vertex range");
    if (!prescribed.empty() && prescribed.members().front() < 0)
        throw InputError("BicoloredGraph: negative vertex in prescribed set");
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    g.check_vertex(v);
    return VertexSet::from_unsorted([&] {
        std::vector<int> vs = g.neighbors(v);
        vs.push_back(v);
        return vs;
    }());
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
    std::vector<char> mark(g.vertex_count(), 0);
    for (int v : x) {
        g.check_vertex(v);
        mark[v] = 1;
        for (int w : g.neighbors(v)) mark[w] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mark[v]) out.push_back(v);
    return VertexSet(std::move(out));
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
    return set_minus(closed_neighborhood(g, x), x);
}

VertexSet private_neighbors(const Graph& g, const VertexSet& s, int x) {
    if (!s.contains(x)) throw InputError("private_neighbors: x not a member of s");
    return set_minus(closed_neighborhood(g, x), closed_neighborhood(g, s.without(x)));
}

bool dominates(const Graph& g, const VertexSet& d, const VertexSet& a) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (int v : d) {
        g.check_vertex(v);
        covered[v] = 1;
        for (int w : g.neighbors(v)) covered[w] = 1;
    }
    for (int v : a) {
        g.check_vertex(v);
        if (!covered[v]) return false;
    }
    return true;
}

bool is_minimal_dominating(const Graph& g, const VertexSet& a, const VertexSet& d) {
    const int n = g.vertex_count();
    std::vector<int> cover(n, 0);
    std::vector<char> in_a(n, 0);
    for (int v : a) {
        g.check_vertex(v);
        in_a[v] = 1;
    }
    for (int x : d) {
        g.check_vertex(x);
        ++cover[x];
        for (int y : g.neighbors(x)) ++cover[y];
    }
    for (int y : a)
        if (cover[y] == 0) return false;
    // cover[y] == 1 and y adjacent-or-equal to x in d means x is y's sole
    // dominator, i.e. y is private to x.
    for (int x : d) {
        bool has_private = in_a[x] && cover[x] == 1;
        if (!has_private) {
            for (int y : g.neighbors(x)) {
                if (in_a[y] && cover[y] == 1) {
                    has_private = true;
                    break;
                }
            }
        }
        if (!has_private) return false;
    }
    return true;
}

namespace {

int induced_edge_count(const Graph& g, const int* vs, int k, int* deg) {
    int e = 0;
    for (int i = 0; i < k; ++i) deg[i] = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(vs[i], vs[j])) {
                ++e;
                ++deg[i];
                ++deg[j];
            }
    return e;
}

} // namespace

std::optional<VertexSet> find_triangle_within(const Graph& g, const VertexSet& a) {
    const auto& vs = a.members();
    const int k = static_cast<int>(vs.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (!g.adjacent(vs[i], vs[j])) continue;
            for (int l = j + 1; l < k; ++l)
                if (g.adjacent(vs[i], vs[l]) && g.adjacent(vs[j], vs[l]))
                    return VertexSet{vs[i], vs[j], vs[l]};
        }
    return std::nullopt;
}

ClassReport detect_classes(const Graph& g) {
    ClassReport rep;
    const int n = g.vertex_count();
    if (auto tri = find_triangle_within(g, VertexSet::full(n))) {
        rep.triangle_free = false;
        rep.triangle = *tri;
    }
    int quad[4];
    int deg[4];
    for (int a = 0; a < n && (rep.diamond_free || rep.paw_free); ++a)
        for (int b = a + 1; b < n && (rep.diamond_free || rep.paw_free); ++b)
            for (int c = b + 1; c < n && (rep.diamond_free || rep.paw_free); ++c)
                for (int d = c + 1; d < n; ++d) {
                    quad[0] = a;
                    quad[1] = b;
                    quad[2] = c;
                    quad[3] = d;
                    int e = induced_edge_count(g, quad, 4, deg);
                    // 5 edges on 4 vertices is the diamond; 4 edges with a
                    // degree-3 vertex is the paw (4 edges otherwise is C4).
                    if (e == 5 && rep.diamond_free) {
                        rep.diamond_free = false;
                        rep.diamond = VertexSet{a, b, c, d};
                    }
                    if (e == 4 && rep.paw_free && (deg[0] == 3 || deg[1] == 3 || deg[2] == 3 || deg[3] == 3)) {
                        rep.paw_free = false;
                        rep.paw = VertexSet{a, b, c, d};
                    }
                    if (!rep.diamond_free && !rep.paw_free) break;
                }
    return rep;
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace domset
