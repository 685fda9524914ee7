#pragma once
// Synthetic temporal graphs: preferential-attachment or uniform-random
// topologies, per-edge contact counts from a uniform or Pareto law, and
// dataset statistics.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tgcsa/corpus.hpp"
#include "tgcsa/query.hpp"

namespace tgcsa {

// xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D), seeded
// through splitmix64 so that nearby seeds give unrelated streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    // Uniform in [0, bound), bound >= 1; rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    // Uniform in (0, 1], 53-bit resolution.
    double unit();

private:
    std::uint64_t state_;
};

struct ContactDist {
    enum class Kind : std::uint8_t { uniform, pareto };
    Kind kind = Kind::uniform;
    std::uint64_t k = 1;   // uniform: fixed count per edge
    double alpha = 1.2;    // pareto shape
    double x_min = 1.0;    // pareto scale

    // "uniform:K", "pareto:ALPHA" or "pareto:ALPHA:XMIN".
    static ContactDist parse(const std::string& s);
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] double mean() const;
    std::uint64_t draw(Rng& rng) const;
};

enum class OverlapPolicy : std::uint8_t { allow, forbid };
enum class Topology : std::uint8_t { ba, random };

struct GenSpec {
    Topology topology = Topology::ba;
    std::uint32_t vertices = 1000;  // ν
    std::uint32_t m = 10;           // edges per new vertex (ba)
    std::uint64_t edges = 0;        // number of edges (random)
    std::uint32_t lifetime = 1000;  // τ
    ContactDist dist;
    OverlapPolicy overlap = OverlapPolicy::allow;
    std::uint32_t max_span = 0;  // allow mode: longest interval, 0 = unbounded
    std::uint64_t seed = 1;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Named parameter sets: "ba", "powerlaw", "icomm".
GenSpec preset(const std::string& name);

std::vector<Edge> gen_ba_aggregated(const GenSpec& spec);
std::vector<Edge> gen_random_aggregated(const GenSpec& spec);
ContactSet assign_contacts(const std::vector<Edge>& edges, const GenSpec& spec);
ContactSet generate(const GenSpec& spec);

struct DatasetStats {
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint64_t lifetime = 0;
    std::uint64_t contacts = 0;
    unsigned arity = 4;
    double contacts_per_vertex = 0;
    double edges_per_vertex = 0;
    double contacts_per_edge = 0;
    std::uint64_t size_u32_bits = 0;  // 32 bits per term
    std::uint64_t size_b_bits = 0;    // ceil(log) bits per term
};

DatasetStats dataset_stats(const ContactSet& cs);
void write_stats_table(std::ostream& out, const std::string& name, const DatasetStats& s);
void write_stats_kv(std::ostream& out, const DatasetStats& s);

}  // namespace tgcsa
