#include "domset/enumerators.hpp"

#include <algorithm>

namespace domset {

StreamPtr enum_mds_triangle_free(const BicoloredGraph& bg, TriangleFreeAuditSink audit,
                                 OrderedGenObserver* observer) {
    if (auto tri = find_triangle_within(bg.graph, bg.prescribed))
        throw ClassViolation("triangle", *tri);
    ExtensionProvider provider = [audit](const ExtensionContext& ctx) {
        return extensions_triangle_free(ctx, audit);
    };
    return enumerate_ordered(bg, std::move(provider), observer);
}

StreamPtr enum_mds_general(const BicoloredGraph& bg, GeneralOptions opts, OrderedGenObserver* observer) {
    if (opts.triangle_free_base && !find_triangle_within(bg.graph, bg.prescribed)) {
        ExtensionProvider provider = [](const ExtensionContext& ctx) {
            return extensions_triangle_free(ctx);
        };
        return enumerate_ordered(bg, std::move(provider), observer);
    }
    ExtensionProvider provider = [opts](const ExtensionContext& ctx) {
        SubEnumerator recurse = [opts](const Graph& g, const VertexSet& a) {
            return enum_mds_general(BicoloredGraph(g, a), opts);
        };
        return dedup(extensions_general(ctx, std::move(recurse)));
    };
    return enumerate_ordered(bg, std::move(provider), observer);
}

namespace {

// Reverse search over the levels G[{0..l-1}]: each maximal independent set
// of the level-l graph has a unique canonical parent one level down, so a
// DFS that regenerates children on demand emits every leaf exactly once in
// polynomial space.
class MisStream final : public SolutionStream {
public:
    explicit MisStream(Graph g) : g_(std::move(g)) {}
    std::unique_ptr<Cursor> start() const override;
    const Graph& graph() const { return g_; }

private:
    Graph g_;
};

class MisCursor final : public Cursor {
public:
    explicit MisCursor(std::shared_ptr<const MisStream> st) : st_(std::move(st)) {
        frames_.push_back(Frame{{}, 0});
    }

    std::optional<VertexSet> next() override {
        const Graph& g = st_->graph();
        const int n = g.vertex_count();
        while (!frames_.empty()) {
            Frame& f = frames_.back();
            const int level = static_cast<int>(frames_.size()) - 1;
            if (level == n) {
                if (f.stage == 0) {
                    f.stage = 1;
                    return VertexSet(f.mis);
                }
                frames_.pop_back();
                continue;
            }
            const int v = level; // vertex joining at this level
            const bool v_free = !touches(g, f.mis, v);
            if (v_free) {
                // v is addable, so I itself is not maximal one level up:
                // the only child is I + v.
                if (f.stage == 0) {
                    f.stage = 1;
                    std::vector<int> child = f.mis;
                    child.push_back(v);
                    frames_.push_back(Frame{std::move(child), 0});
                    continue;
                }
                frames_.pop_back();
                continue;
            }
            if (f.stage == 0) { // child: I unchanged (v stays dominated)
                f.stage = 1;
                frames_.push_back(Frame{f.mis, 0});
                continue;
            }
            if (f.stage == 1) { // child: swap v in, if canonical
                f.stage = 2;
                std::vector<int> base;
                for (int x : f.mis)
                    if (!g.adjacent(x, v)) base.push_back(x);
                std::vector<int> child = base;
                child.push_back(v);
                if (maximal_at(g, child, level + 1) && greedy_complete(g, base, level) == f.mis) {
                    frames_.push_back(Frame{std::move(child), 0});
                }
                continue;
            }
            frames_.pop_back();
        }
        return std::nullopt;
    }

private:
    struct Frame {
        std::vector<int> mis; // sorted
        int stage = 0;
    };

    static bool touches(const Graph& g, const std::vector<int>& set, int v) {
        for (int x : set)
            if (g.adjacent(x, v)) return true;
        return false;
    }

    static bool maximal_at(const Graph& g, const std::vector<int>& set, int m) {
        for (int w = 0; w < m; ++w) {
            if (std::binary_search(set.begin(), set.end(), w)) continue;
            if (!touches(g, set, w)) return false;
        }
        return true;
    }

    // Completes base to a maximal independent set of G[{0..m-1}] by adding
    // the smallest addable vertex first; the canonical parent.
    static std::vector<int> greedy_complete(const Graph& g, std::vector<int> base, int m) {
        for (int w = 0; w < m; ++w) {
            if (std::binary_search(base.begin(), base.end(), w)) continue;
            if (!touches(g, base, w)) base.insert(std::lower_bound(base.begin(), base.end(), w), w);
        }
        return base;
    }

    std::shared_ptr<const MisStream> st_;
    std::vector<Frame> frames_;
};

std::unique_ptr<Cursor> MisStream::start() const {
    return std::make_unique<MisCursor>(std::static_pointer_cast<const MisStream>(shared_from_this()));
}

// Phase 1: maximal independent sets (the edgeless minimal dominating sets).
// Phase 2: for each edge uv, D + {u,v} for D in D(G, V \ N[{u,v}]), kept
// when minimal dominating and uv is the smallest edge it induces.
class KtK2Stream final : public SolutionStream {
public:
    explicit KtK2Stream(Graph g) : g_(std::move(g)), edges_(g_.edges()) {}
    std::unique_ptr<Cursor> start() const override;

    const Graph& graph() const { return g_; }
    const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }

private:
    Graph g_;
    std::vector<std::pair<int, int>> edges_;
};

class KtK2Cursor final : public Cursor {
public:
    explicit KtK2Cursor(std::shared_ptr<const KtK2Stream> st)
        : st_(std::move(st)),
          all_(VertexSet::full(st_->graph().vertex_count())),
          mis_stream_(enum_maximal_independent_sets(st_->graph())),
          mis_cur_(mis_stream_->start()) {}

    std::optional<VertexSet> next() override {
        const Graph& g = st_->graph();
        if (mis_cur_) {
            if (auto m = mis_cur_->next()) return m;
            mis_cur_.reset();
            mis_stream_.reset();
        }
        const auto& edges = st_->edge_list();
        while (edge_idx_ < edges.size()) {
            auto [u, v] = edges[edge_idx_];
            if (!inner_cur_) {
                VertexSet a_uv = set_minus(all_, closed_neighborhood(g, VertexSet{u, v}));
                inner_stream_ = enum_mds_general(BicoloredGraph(g, a_uv));
                inner_cur_ = inner_stream_->start();
            }
            auto d = inner_cur_->next();
            if (!d) {
                inner_cur_.reset();
                inner_stream_.reset();
                ++edge_idx_;
                continue;
            }
            VertexSet b = set_union(*d, VertexSet{u, v});
            if (!is_minimal_dominating(g, all_, b)) continue;
            if (smallest_induced_edge(g, b) != std::pair<int, int>(u, v)) continue;
            return b;
        }
        return std::nullopt;
    }

private:
    static std::pair<int, int> smallest_induced_edge(const Graph& g, const VertexSet& b) {
        const auto& vs = b.members();
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (g.adjacent(vs[i], vs[j])) return {vs[i], vs[j]};
        return {-1, -1};
    }

    std::shared_ptr<const KtK2Stream> st_;
    VertexSet all_;
    StreamPtr mis_stream_;
    std::unique_ptr<Cursor> mis_cur_;
    size_t edge_idx_ = 0;
    StreamPtr inner_stream_;
    std::unique_ptr<Cursor> inner_cur_;
};

std::unique_ptr<Cursor> KtK2Stream::start() const {
    return std::make_unique<KtK2Cursor>(std::static_pointer_cast<const KtK2Stream>(shared_from_this()));
}

} // namespace

StreamPtr enum_maximal_independent_sets(const Graph& g) { return std::make_shared<MisStream>(g); }

StreamPtr enum_mds_kt_plus_k2(const Graph& g) { return dedup(std::make_shared<KtK2Stream>(g)); }

StreamPtr enum_mds_diamond_free(const BicoloredGraph& bg, OrderedGenObserver* observer) {
    ClassReport rep = detect_classes(bg.graph);
    if (!rep.diamond_free) throw ClassViolation("diamond", *rep.diamond);
    ExtensionProvider provider = [](const ExtensionContext& ctx) {
        return dedup(extensions_diamond_free(ctx));
    };
    return enumerate_ordered(bg, std::move(provider), observer);
}

StreamPtr enum_mds_paw_free(const BicoloredGraph& bg, OrderedGenObserver* observer) {
    ClassReport rep = detect_classes(bg.graph);
    if (!rep.paw_free) throw ClassViolation("paw", *rep.paw);
    ExtensionProvider provider = [](const ExtensionContext& ctx) { return extensions_paw_free(ctx); };
    return enumerate_ordered(bg, std::move(provider), observer);
}

} // namespace domset
