#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

// Pull-style cursor over vertex sets; next() yields nullopt once exhausted.
// A cursor is single-threaded and one-shot.
class Cursor {
public:
    virtual ~Cursor() = default;
    virtual std::optional<VertexSet> next() = 0;
};

// A deterministic, restartable producer of vertex sets. Every cursor
// obtained from start() replays the exact same sequence; the repetition
// eliminator relies on this to compare two simulations of the same run.
// Streams are always held through shared_ptr so cursors can share them.
class SolutionStream : public std::enable_shared_from_this<SolutionStream> {
public:
    virtual ~SolutionStream() = default;
    virtual std::unique_ptr<Cursor> start() const = 0;

    // Drains a fresh cursor. Test/CLI convenience; enumeration pipelines
    // never materialize their inputs.
    std::vector<VertexSet> collect() const;
};

using StreamPtr = std::shared_ptr<const SolutionStream>;

// Stream producing exactly one set.
StreamPtr single_solution_stream(VertexSet v);

} // namespace domset
