#pragma once
// Temporal queries over a TgcsaIndex.
//
// Every activity test reduces to two boundaries in A-order: a contact whose
// start-time entry sits at position y and end-time entry at z is active iff
// y <= rt_s and z > rt_e, where rt_s/rt_e are the right ends of the symbol
// ranges of the largest used start/end instants not after the query bounds.
// Instants that never occur are resolved with getmap_floor.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tgcsa/corpus.hpp"
#include "tgcsa/sacsa.hpp"

namespace tgcsa {

struct TimeSemantics {
    enum class Kind : std::uint8_t { instant, strong, weak };

    Kind kind = Kind::instant;
    std::uint32_t t = 0;
    std::uint32_t t_end = 0;  // exclusive; intervals only

    static TimeSemantics at(std::uint32_t t);
    // [t, t_end) fully inside the contact's interval.
    static TimeSemantics strong(std::uint32_t t, std::uint32_t t_end);
    // [t, t_end) overlaps the contact's interval.
    static TimeSemantics weak(std::uint32_t t, std::uint32_t t_end);

    // Largest admissible start time, and the instant the contact must end after.
    [[nodiscard]] std::uint64_t max_start() const;
    [[nodiscard]] std::uint64_t end_after() const;
};

using Edge = std::pair<std::uint32_t, std::uint32_t>;
using VertexSet = std::vector<std::uint32_t>;  // ascending, distinct
using EdgeSet = std::vector<Edge>;             // lexicographic, distinct

struct SymbolRange {
    std::uint64_t l = 1;
    std::uint64_t r = 0;

    [[nodiscard]] bool empty() const { return l > r; }
    [[nodiscard]] std::uint64_t size() const { return empty() ? 0 : r - l + 1; }
    friend bool operator==(const SymbolRange&, const SymbolRange&) = default;
};

// Ψ access accounting; `search` covers binary searches, `buffered` entries
// obtained through range decoding, `random` single-entry accesses.
struct QueryStats {
    std::uint64_t search = 0;
    std::uint64_t buffered = 0;
    std::uint64_t random = 0;
    std::uint64_t candidates = 0;  // length of the range the query iterates

    [[nodiscard]] std::uint64_t loop_accesses() const { return buffered + random; }
};

SymbolRange symbol_range(const TgcsaIndex& idx, std::uint64_t id);
// Positions whose rotation starts with `ids` (consecutive sections, no wrap).
SymbolRange pattern_range(const TgcsaIndex& idx, std::span<const std::uint64_t> ids, QueryStats* stats = nullptr);
// (rt_s, rt_e) for an instant t in [1, τ].
std::pair<std::uint64_t, std::uint64_t> time_bounds(const TgcsaIndex& idx, std::uint32_t t);

VertexSet direct_neighbors(const TgcsaIndex& idx, std::uint32_t vertex, TimeSemantics sem,
                           QueryStats* stats = nullptr);
VertexSet reverse_neighbors(const TgcsaIndex& idx, std::uint32_t vertex, TimeSemantics sem,
                            QueryStats* stats = nullptr);
bool active_edge(const TgcsaIndex& idx, std::uint32_t u, std::uint32_t v, TimeSemantics sem,
                 QueryStats* stats = nullptr);
EdgeSet snapshot(const TgcsaIndex& idx, TimeSemantics sem, QueryStats* stats = nullptr);
// Every active contact, duplicates kept, sorted.
std::vector<Contact> snapshot_contacts(const TgcsaIndex& idx, TimeSemantics sem);

// Contacts starting (ending) exactly at t, or anywhere in [t, t_end).
EdgeSet activated_edges(const TgcsaIndex& idx, std::uint32_t t, QueryStats* stats = nullptr);
EdgeSet activated_edges(const TgcsaIndex& idx, std::uint32_t t, std::uint32_t t_end, QueryStats* stats = nullptr);
EdgeSet deactivated_edges(const TgcsaIndex& idx, std::uint32_t t, QueryStats* stats = nullptr);
EdgeSet deactivated_edges(const TgcsaIndex& idx, std::uint32_t t, std::uint32_t t_end, QueryStats* stats = nullptr);

Contact reconstruct_contact(const TgcsaIndex& idx, std::uint64_t i);

}  // namespace tgcsa
