#pragma once

#include <atomic>
#include <functional>
#include <memory>

#include "domset/stream.hpp"

// Synthetic streams for exercising the repetition eliminator: deterministic
// replayable sequences with known duplicate patterns, a live-cursor audit,
// and a deliberately nondeterministic stream for the failure path.
namespace testutil {

struct CursorAudit {
    static inline std::atomic<int> live{0};
    static inline std::atomic<int> peak{0};
    static void reset() {
        live = 0;
        peak = 0;
    }
    static void inc() {
        int now = ++live;
        int prev = peak.load();
        while (now > prev && !peak.compare_exchange_weak(prev, now)) {
        }
    }
    static void dec() { --live; }
};

// i-th output computed on demand; nothing solution-indexed is stored.
class ProceduralStream final : public domset::SolutionStream {
public:
    using Generator = std::function<domset::VertexSet(long long)>;
    ProceduralStream(long long length, Generator gen) : length_(length), gen_(std::move(gen)) {}

    std::unique_ptr<domset::Cursor> start() const override {
        class Cur final : public domset::Cursor {
        public:
            Cur(long long length, const Generator* gen) : length_(length), gen_(gen) { CursorAudit::inc(); }
            ~Cur() override { CursorAudit::dec(); }
            std::optional<domset::VertexSet> next() override {
                if (pos_ >= length_) return std::nullopt;
                return (*gen_)(pos_++);
            }

        private:
            long long length_;
            const Generator* gen_;
            long long pos_ = 0;
        };
        return std::make_unique<Cur>(length_, &gen_);
    }

private:
    long long length_;
    Generator gen_;
};

// Yields a different sequence on every start(); dedup must detect this.
class NondeterministicStream final : public domset::SolutionStream {
public:
    std::unique_ptr<domset::Cursor> start() const override {
        const int run = runs_++;
        class Cur final : public domset::Cursor {
        public:
            explicit Cur(int run) : run_(run) {}
            std::optional<domset::VertexSet> next() override {
                if (pos_ >= 3) return std::nullopt;
                int v = (pos_ + run_) % 3;
                ++pos_;
                return domset::VertexSet{v};
            }

        private:
            int run_;
            int pos_ = 0;
        };
        return std::make_unique<Cur>(run);
    }

private:
    mutable std::atomic<int> runs_{0};
};

} // namespace testutil
