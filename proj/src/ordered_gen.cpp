#include "domset/ordered_gen.hpp"

#include <algorithm>
#include <vector>

namespace domset {

ExtensionContext make_extension_context(std::shared_ptr<const BicoloredGraph> bg,
                                        std::shared_ptr<const Peeling> peel, int level,
                                        VertexSet d_star) {
    if (level < 0 || level >= peel->depth())
        throw ContractViolation("extension context: level outside [0, p-1]");
    ExtensionContext ctx;
    ctx.bg = std::move(bg);
    ctx.peel = std::move(peel);
    ctx.level = level;
    ctx.d_star = std::move(d_star);
    VertexSet residual =
        set_minus(ctx.peel->level(level + 1), closed_neighborhood(ctx.bg->graph, ctx.d_star));
    const int v_next = ctx.peel->peel_vertex(level + 1);
    ctx.next_vertex_dominated = !residual.contains(v_next);
    ctx.s = residual.without(v_next);
    return ctx;
}

std::pair<VertexSet, int> parent(const BicoloredGraph& bg, const Peeling& p, const VertexSet& d, int i) {
    if (i < 1 || i > p.depth()) throw ContractViolation("parent: level outside [1, p]");
    const Graph& g = bg.graph;
    if (!is_minimal_dominating(g, p.level(i), d))
        throw ContractViolation("parent: d does not minimally dominate V_i");

    const int n = g.vertex_count();
    std::vector<char> in_target(n, 0);
    for (int y : p.level(i - 1)) in_target[y] = 1;
    std::vector<int> cover(n, 0);
    std::vector<char> alive(n, 0);
    for (int x : d) {
        alive[x] = 1;
        ++cover[x];
        for (int y : g.neighbors(x)) ++cover[y];
    }
    // Deleting a vertex only enlarges the privates of the others, so the set
    // of deletable vertices shrinks as we go: one ascending pass visits them
    // in exactly the smallest-index-first order of the definition.
    std::vector<int> kept;
    for (int x : d) {
        bool has_private = in_target[x] && cover[x] == 1;
        if (!has_private) {
            for (int y : g.neighbors(x)) {
                if (in_target[y] && cover[y] == 1) {
                    has_private = true;
                    break;
                }
            }
        }
        if (has_private) {
            kept.push_back(x);
        } else {
            alive[x] = 0;
            --cover[x];
            for (int y : g.neighbors(x)) --cover[y];
        }
    }
    return {VertexSet(std::move(kept)), i - 1};
}

bool check_parent(const BicoloredGraph& bg, const Peeling& p, const VertexSet& d_child, int i,
                  const VertexSet& d_star) {
    if (i < 1 || i > p.depth()) return false;
    if (!is_minimal_dominating(bg.graph, p.level(i), d_child)) return false;
    return parent(bg, p, d_child, i).first == d_star;
}

namespace {

struct EngineShared {
    std::shared_ptr<const BicoloredGraph> bg;
    std::shared_ptr<const Peeling> peel;
    ExtensionProvider provider;
    OrderedGenObserver* observer = nullptr;
};

class EngineCursor final : public Cursor {
public:
    explicit EngineCursor(std::shared_ptr<const EngineShared> sh) : sh_(std::move(sh)) {
        if (sh_->peel->depth() == 0) {
            empty_prescribed_ = true;
            return;
        }
        push_node(VertexSet{});
    }

    std::optional<VertexSet> next() override {
        if (empty_prescribed_) {
            if (root_emitted_) return std::nullopt;
            root_emitted_ = true;
            return VertexSet{};
        }
        const Peeling& peel = *sh_->peel;
        const BicoloredGraph& bg = *sh_->bg;
        const int p = peel.depth();
        while (!frames_.empty()) {
            Frame& f = frames_.back();
            const int i = static_cast<int>(frames_.size()) - 1;
            auto x = f.ext->next();
            if (!x) {
                if (sh_->observer) sh_->observer->node_finished(i, f.d_star, f.produced);
                frames_.pop_back();
                continue;
            }
            ++f.produced;
            VertexSet d_child = set_union(f.d_star, *x);
            if (!is_minimal_dominating(bg.graph, peel.level(i + 1), d_child)) continue;
            if (!(parent(bg, peel, d_child, i + 1).first == f.d_star)) continue;
            if (i + 1 == p) return d_child;
            push_node(std::move(d_child));
        }
        return std::nullopt;
    }

private:
    struct Frame {
        VertexSet d_star;
        std::unique_ptr<Cursor> ext;
        long long produced = 0;
    };

    void push_node(VertexSet d_star) {
        const int level = static_cast<int>(frames_.size());
        ExtensionContext ctx = make_extension_context(sh_->bg, sh_->peel, level, d_star);
        StreamPtr stream = sh_->provider(ctx);
        Frame f;
        f.d_star = std::move(d_star);
        f.ext = stream->start();
        frames_.push_back(std::move(f));
    }

    std::shared_ptr<const EngineShared> sh_;
    std::vector<Frame> frames_;
    bool empty_prescribed_ = false;
    bool root_emitted_ = false;
};

class EngineStream final : public SolutionStream {
public:
    explicit EngineStream(std::shared_ptr<const EngineShared> sh) : sh_(std::move(sh)) {}
    std::unique_ptr<Cursor> start() const override { return std::make_unique<EngineCursor>(sh_); }

private:
    std::shared_ptr<const EngineShared> sh_;
};

class DedupCursor final : public Cursor {
public:
    explicit DedupCursor(StreamPtr inner) : inner_(std::move(inner)), main_(inner_->start()) {}

    std::optional<VertexSet> next() override {
        while (auto y = main_->next()) {
            ++count_;
            // Second simulation: find y's first occurrence and compare the
            // output counters of the two runs.
            auto verify = inner_->start();
            bool duplicate = false;
            bool matched = false;
            for (long long j = 1; j <= count_; ++j) {
                auto z = verify->next();
                if (!z)
                    throw ContractViolation("dedup: replay ended early; inner stream is not deterministic");
                if (*z == *y) {
                    matched = true;
                    duplicate = j < count_;
                    break;
                }
            }
            if (!matched)
                throw ContractViolation("dedup: replay prefix differs; inner stream is not deterministic");
            if (!duplicate) return y;
        }
        return std::nullopt;
    }

private:
    StreamPtr inner_;
    std::unique_ptr<Cursor> main_;
    long long count_ = 0;
};

class DedupStream final : public SolutionStream {
public:
    explicit DedupStream(StreamPtr inner) : inner_(std::move(inner)) {}
    std::unique_ptr<Cursor> start() const override { return std::make_unique<DedupCursor>(inner_); }

private:
    StreamPtr inner_;
};

} // namespace

StreamPtr enumerate_ordered(BicoloredGraph bg, ExtensionProvider provider, OrderedGenObserver* observer) {
    auto sh = std::make_shared<EngineShared>();
    sh->bg = std::make_shared<const BicoloredGraph>(std::move(bg));
    if (sh->bg->prescribed.empty()) {
        // A = {}: the empty set is the unique minimal dominating set; no
        // peeling is needed.
        Peeling trivial;
        trivial.levels.push_back(VertexSet{});
        sh->peel = std::make_shared<const Peeling>(std::move(trivial));
    } else {
        sh->peel = std::make_shared<const Peeling>(compute_peeling(*sh->bg));
    }
    sh->provider = std::move(provider);
    sh->observer = observer;
    return std::make_shared<EngineStream>(std::move(sh));
}

StreamPtr dedup(StreamPtr inner) { return std::make_shared<DedupStream>(std::move(inner)); }

} // namespace domset
