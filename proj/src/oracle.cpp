#include "domset/oracle.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace domset {

namespace {

void check_cap(const Graph& g, int cap) {
    if (cap < 0 || cap > 62) throw InputError("oracle: cap out of supported range");
    if (g.vertex_count() > cap)
        throw InputError("oracle: graph exceeds the brute-force cap of " + std::to_string(cap) + " vertices");
}

VertexSet mask_to_set(std::uint64_t m) {
    std::vector<int> vs;
    while (m) {
        int b = __builtin_ctzll(m);
        vs.push_back(b);
        m &= m - 1;
    }
    return VertexSet(std::move(vs));
}

// Incremental state over the current subset D. Tracks, per vertex y, the
// number of dominators in D and the XOR of their indices (so the sole
// dominator is recoverable when the count is exactly 1), plus per vertex x
// the number of prescribed vertices privately dominated by x.
class GrayState {
public:
    GrayState(const Graph& g, const VertexSet& a) : n_(g.vertex_count()) {
        closed_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            closed_[v] = g.neighbors(v);
            closed_[v].push_back(v);
        }
        in_a_.assign(n_, 0);
        for (int v : a) in_a_[v] = 1;
        cover_.assign(n_, 0);
        xor_dom_.assign(n_, 0);
        credit_.assign(n_, 0);
        in_d_.assign(n_, 0);
        undominated_ = a.size();
    }

    void toggle(int v) { in_d_[v] ? remove(v) : add(v); }

    bool is_minimal_dominating() const { return undominated_ == 0 && violators_ == 0; }

private:
    void add(int v) {
        for (int y : closed_[v]) {
            int old = cover_[y]++;
            if (in_a_[y]) {
                if (old == 1) dec_credit(xor_dom_[y]);
                if (old == 0) {
                    --undominated_;
                    inc_credit(v);
                }
            }
            xor_dom_[y] ^= v;
        }
        in_d_[v] = 1;
        if (credit_[v] == 0) ++violators_;
    }

    void remove(int v) {
        in_d_[v] = 0;
        if (credit_[v] == 0) --violators_;
        for (int y : closed_[v]) {
            int old = cover_[y]--;
            xor_dom_[y] ^= v;
            if (in_a_[y]) {
                if (old == 1) {
                    ++undominated_;
                    dec_credit(v);
                }
                if (old == 2) inc_credit(xor_dom_[y]);
            }
        }
    }

    void inc_credit(int x) {
        if (credit_[x]++ == 0 && in_d_[x]) --violators_;
    }
    void dec_credit(int x) {
        if (--credit_[x] == 0 && in_d_[x]) ++violators_;
    }

    int n_;
    std::vector<std::vector<int>> closed_;
    std::vector<char> in_a_;
    std::vector<int> cover_;
    std::vector<int> xor_dom_;
    std::vector<int> credit_;
    std::vector<char> in_d_;
    int undominated_ = 0;
    int violators_ = 0;
};

std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

// Scans subsets gray(k) for k in [k0, k1); the state is seeded from gray(k0)
// and advanced by single-bit toggles.
void scan_range(const Graph& g, const VertexSet& a, std::uint64_t k0, std::uint64_t k1,
                std::vector<VertexSet>& out) {
    GrayState st(g, a);
    std::uint64_t m = gray(k0);
    for (std::uint64_t bits = m; bits;) {
        int b = __builtin_ctzll(bits);
        st.toggle(b);
        bits &= bits - 1;
    }
    for (std::uint64_t k = k0;;) {
        if (st.is_minimal_dominating()) out.push_back(mask_to_set(m));
        if (++k >= k1) break;
        int b = __builtin_ctzll(k);
        st.toggle(b);
        m ^= (std::uint64_t{1} << b);
    }
}

} // namespace

std::vector<VertexSet> oracle_mds(const Graph& g, const VertexSet& a, int cap) {
    check_cap(g, cap);
    if (!a.empty()) g.check_vertex(a.max_index());
    const int n = g.vertex_count();
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<VertexSet> result;

#ifdef _OPENMP
    if (n >= 14) {
        const int threads = omp_get_max_threads();
        std::vector<std::vector<VertexSet>> parts(threads);
#pragma omp parallel num_threads(threads)
        {
            const int t = omp_get_thread_num();
            std::uint64_t lo = total * t / threads;
            std::uint64_t hi = total * (t + 1) / threads;
            if (lo < hi) scan_range(g, a, lo, hi, parts[t]);
        }
        for (auto& p : parts)
            for (auto& s : p) result.push_back(std::move(s));
        std::sort(result.begin(), result.end());
        return result;
    }
#endif
    scan_range(g, a, 0, total, result);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<VertexSet> oracle_mds(const BicoloredGraph& bg, int cap) {
    return oracle_mds(bg.graph, bg.prescribed, cap);
}

std::vector<VertexSet> oracle_mds_serial(const Graph& g, const VertexSet& a, int cap) {
    check_cap(g, cap);
    const int n = g.vertex_count();
    std::vector<std::uint64_t> nb(n, 0);
    for (int v = 0; v < n; ++v) {
        nb[v] = std::uint64_t{1} << v;
        for (int w : g.neighbors(v)) nb[v] |= std::uint64_t{1} << w;
    }
    std::uint64_t a_mask = 0;
    for (int v : a) a_mask |= std::uint64_t{1} << v;

    std::vector<VertexSet> result;
    std::vector<int> d;
    std::vector<std::uint64_t> prefix, suffix;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < total; ++m) {
        d.clear();
        std::uint64_t covered = 0;
        for (std::uint64_t bits = m; bits;) {
            int b = __builtin_ctzll(bits);
            d.push_back(b);
            covered |= nb[b];
            bits &= bits - 1;
        }
        if ((a_mask & ~covered) != 0) continue;
        const int k = static_cast<int>(d.size());
        prefix.assign(k + 1, 0);
        suffix.assign(k + 1, 0);
        for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] | nb[d[i]];
        for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | nb[d[i]];
        bool minimal = true;
        for (int i = 0; i < k; ++i) {
            std::uint64_t others = prefix[i] | suffix[i + 1];
            if ((nb[d[i]] & a_mask & ~others) == 0) {
                minimal = false;
                break;
            }
        }
        if (minimal) result.push_back(mask_to_set(m));
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool oracle_extension(const Graph& g, const VertexSet& a, int cap) {
    check_cap(g, cap);
    const int n = g.vertex_count();
    std::vector<std::uint64_t> nb(n, 0);
    for (int v = 0; v < n; ++v) {
        nb[v] = std::uint64_t{1} << v;
        for (int w : g.neighbors(v)) nb[v] |= std::uint64_t{1} << w;
    }
    const std::uint64_t v_mask = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t a_mask = 0;
    for (int v : a) a_mask |= std::uint64_t{1} << v;

    std::vector<int> free_vs;
    for (int v = 0; v < n; ++v)
        if (!a.contains(v)) free_vs.push_back(v);
    const int fn = static_cast<int>(free_vs.size());

    std::vector<int> d;
    std::vector<std::uint64_t> prefix, suffix;
    const std::uint64_t total = std::uint64_t{1} << fn;
    for (std::uint64_t fm = 0; fm < total; ++fm) {
        std::uint64_t m = a_mask;
        for (std::uint64_t bits = fm; bits;) {
            int b = __builtin_ctzll(bits);
            m |= std::uint64_t{1} << free_vs[b];
            bits &= bits - 1;
        }
        d.clear();
        std::uint64_t covered = 0;
        for (std::uint64_t bits = m; bits;) {
            int b = __builtin_ctzll(bits);
            d.push_back(b);
            covered |= nb[b];
            bits &= bits - 1;
        }
        if ((v_mask & ~covered) != 0) continue;
        const int k = static_cast<int>(d.size());
        prefix.assign(k + 1, 0);
        suffix.assign(k + 1, 0);
        for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] | nb[d[i]];
        for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | nb[d[i]];
        bool minimal = true;
        for (int i = 0; i < k; ++i) {
            std::uint64_t others = prefix[i] | suffix[i + 1];
            if ((nb[d[i]] & ~others) == 0) {
                minimal = false;
                break;
            }
        }
        if (minimal) return true;
    }
    return false;
}

} // namespace domset
