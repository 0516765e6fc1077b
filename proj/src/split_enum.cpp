#include "domset/split_enum.hpp"

#include <algorithm>

namespace domset {

namespace {

void validate_partition(const Graph& g, const VertexSet& s, const VertexSet& c, bool require_maximal) {
    if (!set_intersect(s, c).empty()) throw InputError("split partition: s and c intersect");
    if (set_union(s, c).size() != g.vertex_count())
        throw InputError("split partition: s and c do not cover the graph");
    const auto& sv = s.members();
    for (size_t i = 0; i < sv.size(); ++i)
        for (size_t j = i + 1; j < sv.size(); ++j)
            if (g.adjacent(sv[i], sv[j])) throw InputError("split partition: s is not independent");
    const auto& cv = c.members();
    for (size_t i = 0; i < cv.size(); ++i)
        for (size_t j = i + 1; j < cv.size(); ++j)
            if (!g.adjacent(cv[i], cv[j])) throw InputError("split partition: c is not a clique");
    if (require_maximal) {
        for (int x : cv) {
            bool has = false;
            for (int w : g.neighbors(x))
                if (s.contains(w)) {
                    has = true;
                    break;
                }
            if (!has) throw ContractViolation("split partition: s is not maximal");
        }
    }
}

class SplitMdsCursor final : public Cursor {
public:
    explicit SplitMdsCursor(const SplitPartition& sp)
        : g_(sp.graph), c_list_(sp.c.members()), n_(sp.graph.vertex_count()) {
        in_s_.assign(n_, 0);
        for (int v : sp.s) in_s_[v] = 1;
        dom_.assign(n_, 0);
        xor_dom_.assign(n_, 0);
        priv_.assign(n_, 0);
        in_x_.assign(n_, 0);
        s_list_ = sp.s.members();
        // depth d decides clique position k-1-d, exclude branch first, so
        // leaves appear in binary-counter order with c_list_[0] as bit 0.
        frames_.push_back(Frame{0});
    }

    std::optional<VertexSet> next() override {
        const int k = static_cast<int>(c_list_.size());
        while (!frames_.empty()) {
            Frame& f = frames_.back();
            const int depth = static_cast<int>(frames_.size()) - 1;
            if (depth == k) {
                if (f.stage == 0) {
                    f.stage = 1;
                    return emit();
                }
                frames_.pop_back();
                continue;
            }
            const int x = c_list_[k - 1 - depth];
            if (f.stage == 0) { // exclude x
                f.stage = 1;
                frames_.push_back(Frame{0});
                continue;
            }
            if (f.stage == 1) { // include x if X + x stays feasible
                f.stage = 2;
                add(x);
                if (violators_ == 0) {
                    f.included = true;
                    frames_.push_back(Frame{0});
                } else {
                    remove(x);
                }
                continue;
            }
            if (f.included) remove(x);
            frames_.pop_back();
        }
        return std::nullopt;
    }

private:
    struct Frame {
        int stage = 0;
        bool included = false;
    };

    VertexSet emit() const {
        std::vector<int> vs = x_members_;
        for (int y : s_list_)
            if (dom_[y] == 0) vs.push_back(y);
        return VertexSet::from_unsorted(std::move(vs));
    }

    void add(int x) {
        for (int y : g_.neighbors(x)) {
            if (!in_s_[y]) continue;
            int old = dom_[y]++;
            if (old == 1) dec_credit(xor_dom_[y]);
            xor_dom_[y] ^= x;
            if (old == 0) inc_credit(x);
        }
        in_x_[x] = 1;
        if (priv_[x] == 0) ++violators_;
        x_members_.push_back(x);
    }

    void remove(int x) {
        in_x_[x] = 0;
        if (priv_[x] == 0) --violators_;
        for (int y : g_.neighbors(x)) {
            if (!in_s_[y]) continue;
            int old = dom_[y]--;
            xor_dom_[y] ^= x;
            if (old == 1) dec_credit(x);
            if (old == 2) inc_credit(xor_dom_[y]);
        }
        x_members_.pop_back();
    }

    void inc_credit(int x) {
        if (priv_[x]++ == 0 && in_x_[x]) --violators_;
    }
    void dec_credit(int x) {
        if (--priv_[x] == 0 && in_x_[x]) ++violators_;
    }

    Graph g_;
    std::vector<int> c_list_;
    std::vector<int> s_list_;
    int n_;
    std::vector<char> in_s_;
    std::vector<int> dom_;
    std::vector<int> xor_dom_;
    std::vector<int> priv_;
    std::vector<char> in_x_;
    std::vector<int> x_members_;
    int violators_ = 0;
    std::vector<Frame> frames_;
};

class SplitMdsStream final : public SolutionStream {
public:
    explicit SplitMdsStream(SplitPartition sp) : sp_(std::move(sp)) {}
    std::unique_ptr<Cursor> start() const override { return std::make_unique<SplitMdsCursor>(sp_); }

private:
    SplitPartition sp_;
};

} // namespace

SplitPartition maximalize_split(const Graph& g, const VertexSet& s, const VertexSet& c) {
    validate_partition(g, s, c, false);
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s) in_s[v] = 1;
    for (int x : c) {
        bool has = false;
        for (int w : g.neighbors(x))
            if (in_s[w]) {
                has = true;
                break;
            }
        if (!has) in_s[x] = 1;
    }
    std::vector<int> new_s, new_c;
    for (int v = 0; v < g.vertex_count(); ++v) (in_s[v] ? new_s : new_c).push_back(v);
    return SplitPartition{g, VertexSet(std::move(new_s)), VertexSet(std::move(new_c))};
}

StreamPtr enumerate_split_mds(const SplitPartition& sp) {
    try {
        validate_partition(sp.graph, sp.s, sp.c, true);
    } catch (const InputError& e) {
        throw ContractViolation(std::string("enumerate_split_mds: ") + e.what());
    }
    return std::make_shared<SplitMdsStream>(sp);
}

} // namespace domset
