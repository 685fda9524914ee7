#pragma once
// Query batch lines:
//   D u t | R v t | E u v t | S t | A t | X t
// optionally followed by ".. t_end [w|s]" for [t, t_end) (strong by default;
// A and X take no semantics letter).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tgcsa/engine.hpp"

namespace tgcsa {

struct BatchQuery {
    char op = 'D';
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    TimeSemantics sem;
    std::size_t line = 0;
};

// Throws ParseError on malformed lines; blank lines and '#' comments are skipped.
std::vector<BatchQuery> parse_batch(std::istream& in);
std::vector<BatchQuery> parse_batch(const std::string& text);

struct QueryAnswer {
    std::string text;          // one output line, without newline
    std::uint64_t results = 0;  // vertices, edges, or 1 for a true edge test
};

QueryAnswer run_query(const QueryEngine& engine, const BatchQuery& q);
// Answer without formatting; returns the result count only.
std::uint64_t count_query(const QueryEngine& engine, const BatchQuery& q);

std::string format_vertices(const VertexSet& vs);
std::string format_edges(const EdgeSet& es);

}  // namespace tgcsa
