#pragma once
// Common query surface shared by the self-index and the baselines, so the
// harness and the tests can drive any of them interchangeably.

#include <cstdint>
#include <string>

#include "tgcsa/query.hpp"

namespace tgcsa {

class QueryEngine {
public:
    virtual ~QueryEngine() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual std::uint64_t size_bits() const = 0;
    [[nodiscard]] virtual std::uint64_t contacts() const = 0;

    virtual VertexSet direct(std::uint32_t u, TimeSemantics sem) const = 0;
    virtual VertexSet reverse(std::uint32_t v, TimeSemantics sem) const = 0;
    virtual bool active(std::uint32_t u, std::uint32_t v, TimeSemantics sem) const = 0;
    virtual EdgeSet snapshot(TimeSemantics sem) const = 0;
    // Contacts starting (ending) at some instant of [t, t_end).
    virtual EdgeSet activated(std::uint32_t t, std::uint32_t t_end) const = 0;
    virtual EdgeSet deactivated(std::uint32_t t, std::uint32_t t_end) const = 0;
};

class TgcsaEngine final : public QueryEngine {
public:
    explicit TgcsaEngine(TgcsaIndex idx) : idx_(std::move(idx)) {}

    [[nodiscard]] const TgcsaIndex& index() const { return idx_; }

    std::string name() const override { return std::string("tgcsa/") + to_string(idx_.codec().kind()); }
    std::uint64_t size_bits() const override { return idx_.size_bits(); }
    std::uint64_t contacts() const override { return idx_.contacts(); }

    VertexSet direct(std::uint32_t u, TimeSemantics sem) const override { return direct_neighbors(idx_, u, sem); }
    VertexSet reverse(std::uint32_t v, TimeSemantics sem) const override { return reverse_neighbors(idx_, v, sem); }
    bool active(std::uint32_t u, std::uint32_t v, TimeSemantics sem) const override {
        return active_edge(idx_, u, v, sem);
    }
    EdgeSet snapshot(TimeSemantics sem) const override { return tgcsa::snapshot(idx_, sem); }
    EdgeSet activated(std::uint32_t t, std::uint32_t t_end) const override {
        return t_end == t + 1 ? activated_edges(idx_, t) : activated_edges(idx_, t, t_end);
    }
    EdgeSet deactivated(std::uint32_t t, std::uint32_t t_end) const override {
        return t_end == t + 1 ? deactivated_edges(idx_, t) : deactivated_edges(idx_, t, t_end);
    }

private:
    TgcsaIndex idx_;
};

}  // namespace tgcsa
