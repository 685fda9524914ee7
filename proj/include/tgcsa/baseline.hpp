#pragma once
// Reference implementations of the query surface: a linear-scan oracle over
// the raw contacts, and the EdgeLog adjacency/time-list index.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tgcsa/byte_io.hpp"
#include "tgcsa/corpus.hpp"
#include "tgcsa/engine.hpp"
#include "tgcsa/int_vector.hpp"

namespace tgcsa {

// Literal activity predicate for a contact alive on [ts, te).
inline bool contact_matches(std::uint64_t ts, std::uint64_t te, const TimeSemantics& sem) {
    switch (sem.kind) {
        case TimeSemantics::Kind::instant:
            return ts <= sem.t && sem.t < te;
        case TimeSemantics::Kind::strong:
            return ts <= sem.t && te >= sem.t_end;
        case TimeSemantics::Kind::weak:
            return ts < sem.t_end && te > sem.t;
    }
    return false;
}

class OracleIndex final : public QueryEngine {
public:
    explicit OracleIndex(ContactSet cs) : cs_(std::move(cs)) {}

    std::string name() const override { return "oracle"; }
    std::uint64_t size_bits() const override { return cs_.size() * 4 * 32; }
    std::uint64_t contacts() const override { return cs_.size(); }

    VertexSet direct(std::uint32_t u, TimeSemantics sem) const override;
    VertexSet reverse(std::uint32_t v, TimeSemantics sem) const override;
    bool active(std::uint32_t u, std::uint32_t v, TimeSemantics sem) const override;
    EdgeSet snapshot(TimeSemantics sem) const override;
    EdgeSet activated(std::uint32_t t, std::uint32_t t_end) const override;
    EdgeSet deactivated(std::uint32_t t, std::uint32_t t_end) const override;

private:
    // Effective end of a contact under the set's time model.
    [[nodiscard]] std::uint64_t end_of(const Contact& c) const;

    ContactSet cs_;
};

class EdgeLogIndex final : public QueryEngine {
public:
    static constexpr std::uint8_t kCodecTag = 16;

    EdgeLogIndex() = default;
    // Throws std::invalid_argument when contacts of one edge overlap.
    static EdgeLogIndex build(const ContactSet& cs);

    std::string name() const override { return "edgelog"; }
    std::uint64_t size_bits() const override;
    std::uint64_t contacts() const override { return n_; }

    VertexSet direct(std::uint32_t u, TimeSemantics sem) const override;
    VertexSet reverse(std::uint32_t v, TimeSemantics sem) const override;
    bool active(std::uint32_t u, std::uint32_t v, TimeSemantics sem) const override;
    EdgeSet snapshot(TimeSemantics sem) const override;
    EdgeSet activated(std::uint32_t t, std::uint32_t t_end) const override;
    EdgeSet deactivated(std::uint32_t t, std::uint32_t t_end) const override;

    [[nodiscard]] std::uint32_t vertices() const { return vertices_; }
    [[nodiscard]] std::uint32_t lifetime() const { return lifetime_; }
    [[nodiscard]] std::uint64_t edges() const { return edges_; }
    // Decoded neighbor list of u and the time list of its k-th edge.
    [[nodiscard]] std::vector<std::uint32_t> neighbors(std::uint32_t u) const;
    [[nodiscard]] std::vector<std::uint32_t> reverse_list(std::uint32_t v) const;
    [[nodiscard]] std::vector<std::uint32_t> time_list(std::uint64_t edge) const;

    void serialize(ByteWriter& out) const;
    static EdgeLogIndex deserialize(ByteReader& in);

private:
    [[nodiscard]] bool valid_vertex(std::uint32_t u) const { return u >= 1 && u <= vertices_; }
    [[nodiscard]] bool edge_matches(std::uint64_t edge, const TimeSemantics& sem) const;
    // Edge number of (u, v), or npos.
    [[nodiscard]] std::uint64_t find_edge(std::uint32_t u, std::uint32_t v) const;
    template <typename Fn>
    void for_each_edge(Fn&& fn) const;

    static constexpr std::uint64_t npos = std::numeric_limits<std::uint64_t>::max();

    std::uint32_t vertices_ = 0;
    std::uint32_t lifetime_ = 0;
    std::uint64_t n_ = 0;
    std::uint64_t edges_ = 0;
    std::vector<std::uint8_t> adj_;    // per vertex: d-gapped targets
    std::vector<std::uint8_t> times_;  // per edge: interval count, d-gapped instants
    std::vector<std::uint8_t> rev_;    // per vertex: d-gapped sources
    IntVector adj_off_;                // byte offsets, ν + 1 entries
    IntVector edge_base_;              // edges before each vertex, ν + 1 entries
    IntVector time_off_;               // byte offsets, e + 1 entries
    IntVector rev_off_;                // byte offsets, ν + 1 entries
};

}  // namespace tgcsa
