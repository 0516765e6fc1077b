#include "domset/extensions.hpp"

#include <algorithm>

namespace domset {

namespace {

void require_independent(const Graph& g, const VertexSet& s, const char* who) {
    const auto& vs = s.members();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j]))
                throw ContractViolation(std::string(who) + ": S contains the edge (" +
                                        std::to_string(vs[i]) + "," + std::to_string(vs[j]) + ")");
}

} // namespace

AuxSplitGraph build_aux_split_graph(const ExtensionContext& ctx) {
    const Graph& g = ctx.graph();
    require_independent(g, ctx.s, "build_aux_split_graph");
    const int v_next = ctx.next_vertex();
    VertexSet c = open_neighborhood(g, ctx.s).without(v_next);

    std::vector<int> to_ambient;
    to_ambient.reserve(ctx.s.size() + c.size());
    for (int v : set_union(ctx.s, c)) to_ambient.push_back(v);
    std::vector<int> local_of(g.vertex_count(), -1);
    for (size_t i = 0; i < to_ambient.size(); ++i) local_of[to_ambient[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    std::vector<int> c_local, s_local;
    for (int v : ctx.s) s_local.push_back(local_of[v]);
    for (int v : c) c_local.push_back(local_of[v]);
    // C completed into a clique; S-C edges taken from g; S stays independent.
    for (size_t i = 0; i < c_local.size(); ++i)
        for (size_t j = i + 1; j < c_local.size(); ++j) edges.emplace_back(c_local[i], c_local[j]);
    for (int sv : ctx.s)
        for (int w : g.neighbors(sv))
            if (c.contains(w)) edges.emplace_back(local_of[sv], local_of[w]);

    Graph h(static_cast<int>(to_ambient.size()), edges);
    SplitPartition sp = maximalize_split(h, VertexSet::from_unsorted(std::move(s_local)),
                                         VertexSet::from_unsorted(std::move(c_local)));
    return AuxSplitGraph{std::move(sp), std::move(to_ambient)};
}

namespace {

VertexSet map_to_ambient(const VertexSet& local, const std::vector<int>& to_ambient) {
    std::vector<int> vs;
    vs.reserve(local.size());
    for (int v : local) vs.push_back(to_ambient[v]); // order-preserving relabeling
    return VertexSet(std::move(vs));
}

// ---------------------------------------------------------------------------
// Independent-S provider (triangle-free characterization)

class TriangleFreeStream final : public SolutionStream {
public:
    TriangleFreeStream(ExtensionContext ctx, TriangleFreeAuditSink sink)
        : ctx_(std::move(ctx)),
          sink_(std::move(sink)),
          aux_(build_aux_split_graph(ctx_)),
          split_(enumerate_split_mds(aux_.partition)) {}

    std::unique_ptr<Cursor> start() const override;

    const ExtensionContext& ctx() const { return ctx_; }
    const AuxSplitGraph& aux() const { return aux_; }
    const SolutionStream& split() const { return *split_; }
    const TriangleFreeAuditSink& sink() const { return sink_; }

private:
    ExtensionContext ctx_;
    TriangleFreeAuditSink sink_;
    AuxSplitGraph aux_;
    StreamPtr split_;
};

class TriangleFreeCursor final : public Cursor {
public:
    explicit TriangleFreeCursor(std::shared_ptr<const TriangleFreeStream> st)
        : st_(std::move(st)),
          v_(st_->ctx().next_vertex()),
          r_(st_->ctx().residual()),
          n_(st_->ctx().graph().vertex_count()) {}

    std::optional<VertexSet> next() override {
        const Graph& g = st_->ctx().graph();
        for (;;) {
            switch (phase_) {
            case 0: { // the bare peeled vertex
                phase_ = 1;
                split_cur_ = st_->split().start();
                VertexSet b{v_};
                if (passes(b)) {
                    ++emitted_;
                    return b;
                }
                break;
            }
            case 1: { // D(H), mapped back
                auto d = split_cur_->next();
                if (!d) {
                    phase_ = 2;
                    split_cur_ = st_->split().start();
                    break;
                }
                ++dh_count_;
                VertexSet b = map_to_ambient(*d, st_->aux().to_ambient);
                if (passes(b)) {
                    ++emitted_;
                    return b;
                }
                break;
            }
            case 2: { // one-vertex augmentations D ∪ {u}
                if (!aug_base_) {
                    auto d = split_cur_->next();
                    if (!d) {
                        finish();
                        phase_ = 3;
                        break;
                    }
                    aug_base_ = map_to_ambient(*d, st_->aux().to_ambient);
                    u_ = 0;
                }
                while (u_ < n_) {
                    const int u = u_++;
                    if (u == v_ || aug_base_->contains(u)) continue;
                    VertexSet b = aug_base_->with(u);
                    if (passes(b) && sole_private_is_peel_vertex(g, b, u)) {
                        ++emitted_;
                        return b;
                    }
                }
                aug_base_.reset();
                break;
            }
            default:
                return std::nullopt;
            }
        }
    }

private:
    bool passes(const VertexSet& b) const { return is_minimal_dominating(st_->ctx().graph(), r_, b); }

    bool sole_private_is_peel_vertex(const Graph& g, const VertexSet& b, int u) const {
        VertexSet pr = set_intersect(private_neighbors(g, b, u), r_);
        return pr == VertexSet{v_};
    }

    void finish() {
        if (dh_count_ > static_cast<long long>(n_) * emitted_ + 1)
            throw ContractViolation("triangle-free provider: |D(H)| exceeds n*|C|+1");
        if (st_->sink()) st_->sink()(TriangleFreeNodeAudit{dh_count_, emitted_, n_});
    }

    std::shared_ptr<const TriangleFreeStream> st_;
    int v_;
    VertexSet r_;
    int n_;
    int phase_ = 0;
    std::unique_ptr<Cursor> split_cur_;
    std::optional<VertexSet> aug_base_;
    int u_ = 0;
    long long dh_count_ = 0;
    long long emitted_ = 0;
};

std::unique_ptr<Cursor> TriangleFreeStream::start() const {
    return std::make_unique<TriangleFreeCursor>(
        std::static_pointer_cast<const TriangleFreeStream>(shared_from_this()));
}

// ---------------------------------------------------------------------------
// Two-case candidate-extension stream over a sub-enumerator: pass-through
// when the peeled vertex is already dominated, otherwise one pass per
// potential dominator w of it.

class CaseSplitStream final : public SolutionStream {
public:
    CaseSplitStream(ExtensionContext ctx, SubEnumerator sub) : ctx_(std::move(ctx)), sub_(std::move(sub)) {
        int v = ctx_.next_vertex();
        w_list_ = closed_neighborhood(ctx_.graph(), v).members();
    }

    std::unique_ptr<Cursor> start() const override;

    const ExtensionContext& ctx() const { return ctx_; }
    const SubEnumerator& sub() const { return sub_; }
    const std::vector<int>& w_list() const { return w_list_; }

private:
    ExtensionContext ctx_;
    SubEnumerator sub_;
    std::vector<int> w_list_;
};

class CaseSplitCursor final : public Cursor {
public:
    explicit CaseSplitCursor(std::shared_ptr<const CaseSplitStream> st)
        : st_(std::move(st)), r_(st_->ctx().residual()) {}

    std::optional<VertexSet> next() override {
        const Graph& g = st_->ctx().graph();
        const auto& ws = st_->w_list();
        while (w_idx_ < ws.size()) {
            if (!q_cur_) {
                const int w = ws[w_idx_];
                q_stream_ = st_->sub()(g, set_minus(st_->ctx().s, closed_neighborhood(g, w)));
                q_cur_ = q_stream_->start();
            }
            auto q = q_cur_->next();
            if (!q) {
                q_cur_.reset();
                q_stream_.reset();
                ++w_idx_;
                continue;
            }
            VertexSet b = q->with(ws[w_idx_]);
            if (is_minimal_dominating(g, r_, b)) return b;
        }
        return std::nullopt;
    }

private:
    std::shared_ptr<const CaseSplitStream> st_;
    VertexSet r_;
    size_t w_idx_ = 0;
    StreamPtr q_stream_;
    std::unique_ptr<Cursor> q_cur_;
};

std::unique_ptr<Cursor> CaseSplitStream::start() const {
    return std::make_unique<CaseSplitCursor>(
        std::static_pointer_cast<const CaseSplitStream>(shared_from_this()));
}

// ---------------------------------------------------------------------------
// Diamond-free machinery

class CliqueMdsStream final : public SolutionStream {
public:
    CliqueMdsStream(const Graph& g, const VertexSet& k, int v_center) : v_center_(v_center) {
        if (k.empty()) throw ContractViolation("clique_mds: empty clique");
        for (int x : k) {
            if (!g.adjacent(x, v_center)) throw ContractViolation("clique_mds: k not inside N(v_center)");
        }
        const auto& kv = k.members();
        for (size_t i = 0; i < kv.size(); ++i)
            for (size_t j = i + 1; j < kv.size(); ++j)
                if (!g.adjacent(kv[i], kv[j])) throw ContractViolation("clique_mds: k is not a clique");

        std::vector<char> closed_v(g.vertex_count(), 0);
        closed_v[v_center] = 1;
        for (int w : g.neighbors(v_center)) closed_v[w] = 1;

        for (int u : g.neighbors(v_center)) {
            bool touches = k.contains(u);
            if (!touches)
                for (int w : g.neighbors(u))
                    if (k.contains(w)) {
                        touches = true;
                        break;
                    }
            if (touches) complete_singletons_.push_back(u);
        }

        std::vector<char> seen(g.vertex_count(), 0);
        for (int x : k) {
            std::vector<int> factor;
            for (int y : g.neighbors(x))
                if (!closed_v[y]) {
                    if (seen[y])
                        throw ContractViolation(
                            "clique_mds: outside neighborhoods overlap at vertex " + std::to_string(y) +
                            " (diamond witness)");
                    seen[y] = 1;
                    factor.push_back(y);
                }
            factors_.push_back(std::move(factor));
        }
    }

    std::unique_ptr<Cursor> start() const override;

    int v_center() const { return v_center_; }
    const std::vector<int>& complete_singletons() const { return complete_singletons_; }
    const std::vector<std::vector<int>>& factors() const { return factors_; }

private:
    int v_center_;
    std::vector<int> complete_singletons_;
    std::vector<std::vector<int>> factors_;
};

class CliqueMdsCursor final : public Cursor {
public:
    explicit CliqueMdsCursor(std::shared_ptr<const CliqueMdsStream> st) : st_(std::move(st)) {
        products_live_ = true;
        for (const auto& f : st_->factors())
            if (f.empty()) products_live_ = false;
        odometer_.assign(st_->factors().size(), 0);
    }

    std::optional<VertexSet> next() override {
        if (phase_ == 0) {
            phase_ = 1;
            return VertexSet{st_->v_center()};
        }
        if (phase_ == 1) {
            if (b_idx_ < st_->complete_singletons().size())
                return VertexSet{st_->complete_singletons()[b_idx_++]};
            phase_ = 2;
        }
        if (!products_live_) return std::nullopt;
        // unordered Cartesian products, odometer over the (disjoint) factors
        std::vector<int> vs;
        vs.reserve(odometer_.size());
        for (size_t j = 0; j < odometer_.size(); ++j) vs.push_back(st_->factors()[j][odometer_[j]]);
        size_t j = odometer_.size();
        while (j > 0) {
            --j;
            if (++odometer_[j] < st_->factors()[j].size()) break;
            odometer_[j] = 0;
            if (j == 0) products_live_ = false;
        }
        return VertexSet::from_unsorted(std::move(vs));
    }

private:
    std::shared_ptr<const CliqueMdsStream> st_;
    int phase_ = 0;
    size_t b_idx_ = 0;
    bool products_live_ = false;
    std::vector<size_t> odometer_;
};

std::unique_ptr<Cursor> CliqueMdsStream::start() const {
    return std::make_unique<CliqueMdsCursor>(
        std::static_pointer_cast<const CliqueMdsStream>(shared_from_this()));
}

// ---------------------------------------------------------------------------
// Complete-multipartite provider (paw-free, S with at least one edge)

class PawFreeStream final : public SolutionStream {
public:
    PawFreeStream(ExtensionContext ctx, std::vector<VertexSet> parts)
        : ctx_(std::move(ctx)), parts_(std::move(parts)) {
        max_size_ = ctx_.next_vertex_dominated ? 2 : 3;
    }

    std::unique_ptr<Cursor> start() const override;

    const ExtensionContext& ctx() const { return ctx_; }
    const std::vector<VertexSet>& parts() const { return parts_; }
    int max_size() const { return max_size_; }

private:
    ExtensionContext ctx_;
    std::vector<VertexSet> parts_;
    int max_size_;
};

class PawFreeCursor final : public Cursor {
public:
    explicit PawFreeCursor(std::shared_ptr<const PawFreeStream> st)
        : st_(std::move(st)), r_(st_->ctx().residual()), n_(st_->ctx().graph().vertex_count()) {}

    std::optional<VertexSet> next() override {
        const Graph& g = st_->ctx().graph();
        while (part_idx_ < st_->parts().size()) {
            const VertexSet& p = st_->parts()[part_idx_++];
            if (is_minimal_dominating(g, r_, p)) return p;
        }
        while (size_ <= st_->max_size()) {
            if (comb_.empty()) {
                if (size_ > n_) break;
                comb_.resize(size_);
                for (int i = 0; i < size_; ++i) comb_[i] = i;
                fresh_ = true;
            }
            if (!fresh_ && !advance()) {
                comb_.clear();
                ++size_;
                continue;
            }
            fresh_ = false;
            VertexSet b(std::vector<int>(comb_.begin(), comb_.end()));
            if (equals_some_part(b)) continue;
            if (is_minimal_dominating(g, r_, b)) return b;
        }
        return std::nullopt;
    }

private:
    bool advance() {
        int i = size_ - 1;
        while (i >= 0 && comb_[i] == n_ - size_ + i) --i;
        if (i < 0) return false;
        ++comb_[i];
        for (int j = i + 1; j < size_; ++j) comb_[j] = comb_[j - 1] + 1;
        return true;
    }

    bool equals_some_part(const VertexSet& b) const {
        for (const auto& p : st_->parts())
            if (p == b) return true;
        return false;
    }

    std::shared_ptr<const PawFreeStream> st_;
    VertexSet r_;
    int n_;
    size_t part_idx_ = 0;
    int size_ = 1;
    bool fresh_ = true;
    std::vector<int> comb_;
};

std::unique_ptr<Cursor> PawFreeStream::start() const {
    return std::make_unique<PawFreeCursor>(std::static_pointer_cast<const PawFreeStream>(shared_from_this()));
}

bool has_internal_edge(const Graph& g, const VertexSet& s) {
    const auto& vs = s.members();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return true;
    return false;
}

// Connected components of the complement of G[s]; for a complete
// multipartite G[s] these are exactly the parts.
std::vector<VertexSet> complement_components(const Graph& g, const VertexSet& s) {
    const auto& vs = s.members();
    const int k = static_cast<int>(vs.size());
    std::vector<int> comp(k, -1);
    int nc = 0;
    for (int i = 0; i < k; ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> stack{i};
        comp[i] = nc;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int j = 0; j < k; ++j)
                if (comp[j] == -1 && !g.adjacent(vs[cur], vs[j])) {
                    comp[j] = nc;
                    stack.push_back(j);
                }
        }
        ++nc;
    }
    std::vector<std::vector<int>> parts(nc);
    for (int i = 0; i < k; ++i) parts[comp[i]].push_back(vs[i]);
    std::vector<VertexSet> out;
    out.reserve(nc);
    for (auto& p : parts) out.emplace_back(VertexSet::from_unsorted(std::move(p)));
    return out;
}

} // namespace

StreamPtr extensions_triangle_free(const ExtensionContext& ctx, TriangleFreeAuditSink sink) {
    return std::make_shared<TriangleFreeStream>(ctx, std::move(sink));
}

StreamPtr extensions_general(const ExtensionContext& ctx, SubEnumerator recurse) {
    if (ctx.next_vertex_dominated) return recurse(ctx.graph(), ctx.s);
    return std::make_shared<CaseSplitStream>(ctx, std::move(recurse));
}

StreamPtr clique_mds(const Graph& g, const VertexSet& k, int v_center) {
    return std::make_shared<CliqueMdsStream>(g, k, v_center);
}

StreamPtr cluster_mds(const Graph& g, const VertexSet& w) {
    ExtensionProvider provider = [](const ExtensionContext& ictx) -> StreamPtr {
        const int u_next = ictx.next_vertex();
        SubEnumerator per_clique = [u_next](const Graph& gg, const VertexSet& kk) -> StreamPtr {
            if (kk.empty()) return single_solution_stream(VertexSet{});
            return clique_mds(gg, kk, u_next);
        };
        return dedup(extensions_general(ictx, std::move(per_clique)));
    };
    return enumerate_ordered(BicoloredGraph(g, w), std::move(provider));
}

StreamPtr extensions_diamond_free(const ExtensionContext& ctx) {
    return extensions_general(ctx, [](const Graph& g, const VertexSet& w) { return cluster_mds(g, w); });
}

StreamPtr extensions_paw_free(const ExtensionContext& ctx) {
    const Graph& g = ctx.graph();
    if (!has_internal_edge(g, ctx.s)) {
        // With S independent the independent-S provider applies as is: the
        // auxiliary split graph and the membership tests only involve edges
        // incident to S and the residual set.
        return extensions_triangle_free(ctx);
    }
    std::vector<VertexSet> parts = complement_components(g, ctx.s);
    for (const auto& p : parts) {
        const auto& pv = p.members();
        for (size_t i = 0; i < pv.size(); ++i)
            for (size_t j = i + 1; j < pv.size(); ++j)
                if (g.adjacent(pv[i], pv[j]))
                    throw ContractViolation("extensions_paw_free: S is not complete multipartite (paw witness)");
    }
    // Every vertex outside N[v_{i+1}] that sees S must be complete to S.
    const int v_next = ctx.next_vertex();
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (u == v_next || g.adjacent(u, v_next)) continue;
        bool sees = false;
        for (int w : g.neighbors(u))
            if (ctx.s.contains(w)) {
                sees = true;
                break;
            }
        if (!sees) continue;
        for (int w : ctx.s)
            if (!g.adjacent(u, w))
                throw ContractViolation("extensions_paw_free: vertex " + std::to_string(u) +
                                        " sees S but is not complete to it (paw witness)");
    }
    return std::make_shared<PawFreeStream>(ctx, std::move(parts));
}

} // namespace domset
