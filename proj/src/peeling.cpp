#include "domset/peeling.hpp"

#include <algorithm>

namespace domset {

Peeling compute_peeling(const BicoloredGraph& bg) {
    // Build downward from V_p = A, peeling the smallest-index vertex of the
    // residual set each step, then reverse into (V_0, ..., V_p).
    std::vector<VertexSet> down;
    std::vector<int> picked;
    VertexSet cur = bg.prescribed;
    down.push_back(cur);
    while (!cur.empty()) {
        int v = cur.members().front();
        picked.push_back(v);
        cur = set_minus(cur, closed_neighborhood(bg.graph, v));
        down.push_back(cur);
    }
    Peeling p;
    p.levels.assign(down.rbegin(), down.rend());
    p.vertex_sequence.assign(picked.rbegin(), picked.rend());
    return p;
}

bool validate_peeling(const BicoloredGraph& bg, const Peeling& p) {
    const int depth = p.depth();
    if (static_cast<int>(p.levels.size()) != depth + 1) return false;
    if (!p.levels.front().empty()) return false;
    if (!(p.levels.back() == bg.prescribed)) return false;
    for (int i = 1; i <= depth; ++i) {
        int v = p.vertex_sequence[i - 1];
        if (v < 0 || v >= bg.graph.vertex_count()) return false;
        if (!p.levels[i].contains(v)) return false;
        if (!(p.levels[i - 1] == set_minus(p.levels[i], closed_neighborhood(bg.graph, v)))) return false;
        // implied, but cheap to recheck: v_i has no neighbor in V_{i-1}
        for (int w : bg.graph.neighbors(v))
            if (p.levels[i - 1].contains(w)) return false;
    }
    return true;
}

} // namespace domset
