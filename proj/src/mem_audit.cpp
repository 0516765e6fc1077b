#include "domset/mem_audit.hpp"

#include <atomic>

namespace domset::mem_audit {

namespace {
std::atomic<long long> g_live{0};
std::atomic<long long> g_peak{0};
} // namespace

void on_create() {
    long long now = g_live.fetch_add(1, std::memory_order_relaxed) + 1;
    long long prev = g_peak.load(std::memory_order_relaxed);
    while (now > prev && !g_peak.compare_exchange_weak(prev, now, std::memory_order_relaxed)) {
    }
}

void on_destroy() { g_live.fetch_sub(1, std::memory_order_relaxed); }

long long live() { return g_live.load(std::memory_order_relaxed); }

long long peak() { return g_peak.load(std::memory_order_relaxed); }

void reset_peak() { g_peak.store(g_live.load(std::memory_order_relaxed), std::memory_order_relaxed); }

} // namespace domset::mem_audit
