#pragma once
// Contacts, the disjoint-alphabet symbol map, and the id sequence Sid.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgcsa/bitseq.hpp"

namespace tgcsa {

// Role of a term inside a contact; values double as 1-based section numbers.
enum class Section : std::uint8_t { source = 1, target = 2, start = 3, end = 4 };

// How a contact's activity is derived from its terms.
//   interval    - 4 terms, active on [ts, te)
//   incremental - 3 terms, active from ts onwards
//   point       - 3 terms, active only at ts
enum class TimeModel : std::uint8_t { interval = 0, incremental = 1, point = 2 };

const char* to_string(TimeModel m);
TimeModel time_model_from_string(const std::string& s);

struct Contact {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    std::uint32_t ts = 0;
    std::uint32_t te = 0;  // unused (0) when arity is 3

    friend auto operator<=>(const Contact&, const Contact&) = default;
};

struct ContactSet {
    std::vector<Contact> contacts;  // sorted by (u, v, ts, te)
    std::uint32_t vertices = 0;     // ν
    std::uint32_t lifetime = 0;     // τ
    unsigned arity = 4;
    TimeModel model = TimeModel::interval;

    [[nodiscard]] std::size_t size() const { return contacts.size(); }
    [[nodiscard]] bool empty() const { return contacts.empty(); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParseOptions {
    unsigned arity = 4;
    TimeModel model = TimeModel::interval;  // for arity 3: incremental or point
    std::uint32_t vertices = 0;             // 0: use the largest vertex seen
    std::uint32_t lifetime = 0;             // 0: use the largest instant seen
};

ContactSet parse_contacts(std::istream& in, const ParseOptions& opts = {});
ContactSet parse_contacts(const std::string& text, const ParseOptions& opts = {});

// Validates, fills universes (0 = observed maximum) and sorts.
ContactSet make_contact_set(std::vector<Contact> contacts, unsigned arity = 4,
                            TimeModel model = TimeModel::interval, std::uint32_t vertices = 0,
                            std::uint32_t lifetime = 0);

// Drops the end-time term, keeping ν and τ (incremental or point model).
ContactSet to_arity3(const ContactSet& cs, TimeModel model = TimeModel::incremental);

void write_contacts(std::ostream& out, const ContactSet& cs);

class AlphabetMap {
public:
    AlphabetMap() = default;
    static AlphabetMap build(const ContactSet& cs);

    // Symbol id in [1, σ], or 0 when the value never occurs in that role.
    [[nodiscard]] std::uint64_t getmap(std::uint64_t value, Section s) const;
    // rank1(B, value + gaps[s]): the largest used id at or before this slot of Σ′.
    [[nodiscard]] std::uint64_t getmap_floor(std::uint64_t value, Section s) const;
    [[nodiscard]] std::uint64_t getunmap(std::uint64_t id, Section s) const;
    // Role of a symbol id, from its slot in Σ′.
    [[nodiscard]] Section section_of(std::uint64_t id) const;

    [[nodiscard]] std::uint64_t gap(Section s) const { return gaps_[index(s)]; }
    [[nodiscard]] std::uint64_t universe(Section s) const;
    [[nodiscard]] const BitSequence& used() const { return b_; }
    [[nodiscard]] std::uint64_t sigma() const { return b_.count_ones(); }
    [[nodiscard]] std::uint32_t vertices() const { return vertices_; }
    [[nodiscard]] std::uint32_t lifetime() const { return lifetime_; }
    [[nodiscard]] unsigned arity() const { return arity_; }

    void serialize(ByteWriter& out) const;
    static AlphabetMap deserialize(ByteReader& in);

private:
    [[nodiscard]] unsigned index(Section s) const;
    void fill_gaps();

    std::array<std::uint64_t, 4> gaps_{};
    BitSequence b_;
    std::uint32_t vertices_ = 0;
    std::uint32_t lifetime_ = 0;
    unsigned arity_ = 4;
};

// Concatenation of the mapped terms of every contact, length arity·n, ids in [1, σ].
std::vector<std::uint64_t> build_sid(const ContactSet& cs, const AlphabetMap& am);

}  // namespace tgcsa
