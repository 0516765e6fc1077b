#include "domset/stream.hpp"

namespace domset {

std::vector<VertexSet> SolutionStream::collect() const {
    std::vector<VertexSet> out;
    auto cur = start();
    while (auto s = cur->next()) out.push_back(std::move(*s));
    return out;
}

namespace {

class SingleStream final : public SolutionStream {
public:
    explicit SingleStream(VertexSet v) : value_(std::move(v)) {}

    std::unique_ptr<Cursor> start() const override {
        class Cur final : public Cursor {
        public:
            explicit Cur(const VertexSet& v) : value_(v) {}
            std::optional<VertexSet> next() override {
                if (done_) return std::nullopt;
                done_ = true;
                return value_;
            }

        private:
            VertexSet value_;
            bool done_ = false;
        };
        return std::make_unique<Cur>(value_);
    }

private:
    VertexSet value_;
};

} // namespace

StreamPtr single_solution_stream(VertexSet v) {
    return std::make_shared<SingleStream>(std::move(v));
}

} // namespace domset
