#include "tgcsa/synth.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "tgcsa/int_vector.hpp"

namespace tgcsa {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t edge_key(std::uint32_t u, std::uint32_t v) { return (std::uint64_t{u} << 32) | v; }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    state_ = splitmix64(seed);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Rng::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
    std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    while (true) {
        std::uint64_t x = next();
        if (x >= limit) return x % bound;
    }
}

double Rng::unit() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------

ContactDist ContactDist::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("distribution must be uniform:K or pareto:ALPHA");
    std::string kind = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    ContactDist d;
    try {
        if (kind == "uniform") {
            d.kind = Kind::uniform;
            std::size_t used = 0;
            long long k = std::stoll(rest, &used);
            if (used != rest.size() || k < 1) throw std::invalid_argument("k");
            d.k = static_cast<std::uint64_t>(k);
        } else if (kind == "pareto") {
            d.kind = Kind::pareto;
            auto c2 = rest.find(':');
            std::size_t used = 0;
            std::string a = rest.substr(0, c2);
            d.alpha = std::stod(a, &used);
            if (used != a.size()) throw std::invalid_argument("alpha");
            if (c2 != std::string::npos) {
                std::string x = rest.substr(c2 + 1);
                d.x_min = std::stod(x, &used);
                if (used != x.size()) throw std::invalid_argument("x_min");
            }
            if (!(d.alpha > 1.0) || !(d.x_min > 0.0)) throw std::invalid_argument("range");
        } else {
            throw std::invalid_argument("kind");
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad distribution '" + s + "' (uniform:K with K >= 1, pareto:ALPHA with ALPHA > 1)");
    }
    return d;
}

std::string ContactDist::to_string() const {
    if (kind == Kind::uniform) return "uniform:" + std::to_string(k);
    std::ostringstream os;
    os << "pareto:" << alpha << ':' << x_min;
    return os.str();
}

double ContactDist::mean() const {
    if (kind == Kind::uniform) return static_cast<double>(k);
    return alpha * x_min / (alpha - 1.0);
}

std::uint64_t ContactDist::draw(Rng& rng) const {
    if (kind == Kind::uniform) return k;
    double x = x_min / std::pow(rng.unit(), 1.0 / alpha);
    double cap = std::ceil(10.0 * mean());
    double c = std::min(std::ceil(x), cap);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(c));
}

// ---------------------------------------------------------------------------

void GenSpec::validate() const {
    if (vertices < 2) throw std::invalid_argument("vertices must be at least 2");
    if (lifetime < 2) throw std::invalid_argument("lifetime must be at least 2");
    if (topology == Topology::ba) {
        if (m < 1) throw std::invalid_argument("m must be at least 1");
        if (vertices < m + 1) throw std::invalid_argument("vertices must exceed m");
    } else {
        std::uint64_t nu = vertices;
        if (edges > nu * (nu - 1)) throw std::invalid_argument("more edges requested than vertex pairs");
    }
    if (dist.kind == ContactDist::Kind::uniform && dist.k < 1) throw std::invalid_argument("uniform k must be >= 1");
    if (dist.kind == ContactDist::Kind::pareto && !(dist.alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
    if (overlap == OverlapPolicy::forbid && dist.kind == ContactDist::Kind::uniform && dist.k > lifetime / 2) {
        throw std::invalid_argument("cannot place " + std::to_string(dist.k) + " disjoint intervals in lifetime " +
                                    std::to_string(lifetime));
    }
}

GenSpec preset(const std::string& name) {
    GenSpec s;
    if (name == "ba") {
        s.topology = Topology::ba;
        s.vertices = 1000;
        s.m = 10;
        s.lifetime = 1000;
        s.dist = ContactDist{ContactDist::Kind::uniform, 50, 1.2, 1.0};
    } else if (name == "powerlaw") {
        s.topology = Topology::ba;
        s.vertices = 1000;
        s.m = 32;
        s.lifetime = 1000;
        s.dist = ContactDist{ContactDist::Kind::uniform, 1, 1.2, 1.0};
    } else if (name == "icomm") {
        // Short communications between random pairs; about 1.2 contacts per edge.
        s.topology = Topology::random;
        s.vertices = 10000;
        s.edges = 159410;
        s.lifetime = 1000;
        s.max_span = 4;
        s.dist = ContactDist{ContactDist::Kind::pareto, 1, 2.5, 0.5};
    } else {
        throw std::invalid_argument("unknown preset '" + name + "' (ba, powerlaw, icomm)");
    }
    return s;
}

std::vector<Edge> gen_ba_aggregated(const GenSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    std::vector<Edge> out;
    std::vector<std::uint32_t> ends;  // every edge endpoint; sampling from it is degree-proportional
    auto add = [&](std::uint32_t a, std::uint32_t b) {
        if (rng.below(2) == 0) {
            out.emplace_back(a, b);
        } else {
            out.emplace_back(b, a);
        }
        ends.push_back(a);
        ends.push_back(b);
    };
    const std::uint32_t m = spec.m;
    for (std::uint32_t v = 2; v <= std::min(spec.vertices, m + 1); ++v) {
        for (std::uint32_t w = 1; w < v; ++w) add(v, w);
    }
    std::vector<std::uint32_t> picked;
    for (std::uint32_t v = m + 2; v <= spec.vertices; ++v) {
        picked.clear();
        while (picked.size() < m) {
            std::uint32_t w = ends[rng.below(ends.size())];
            if (std::find(picked.begin(), picked.end(), w) == picked.end()) picked.push_back(w);
        }
        for (auto w : picked) add(v, w);
    }
    return out;
}

std::vector<Edge> gen_random_aggregated(const GenSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    std::vector<Edge> out;
    std::unordered_set<std::uint64_t> seen;
    out.reserve(spec.edges);
    while (out.size() < spec.edges) {
        auto u = static_cast<std::uint32_t>(rng.between(1, spec.vertices));
        auto v = static_cast<std::uint32_t>(rng.between(1, spec.vertices));
        if (u == v || !seen.insert(edge_key(u, v)).second) continue;
        out.emplace_back(u, v);
    }
    return out;
}

ContactSet assign_contacts(const std::vector<Edge>& edges, const GenSpec& spec) {
    spec.validate();
    // A separate stream from the topology, so changing the law keeps the graph.
    Rng rng(spec.seed ^ 0xA5A5A5A5A5A5A5A5ULL);
    const std::uint32_t tau = spec.lifetime;
    std::vector<Contact> contacts;
    std::vector<std::uint32_t> points;
    std::unordered_set<std::uint32_t> chosen;
    for (auto [u, v] : edges) {
        std::uint64_t k = spec.dist.draw(rng);
        if (spec.overlap == OverlapPolicy::allow) {
            for (std::uint64_t j = 0; j < k; ++j) {
                auto ts = static_cast<std::uint32_t>(rng.between(1, tau - 1));
                std::uint32_t hi = tau;
                if (spec.max_span != 0) hi = static_cast<std::uint32_t>(std::min<std::uint64_t>(tau, std::uint64_t{ts} + spec.max_span));
                auto te = static_cast<std::uint32_t>(rng.between(ts + 1, hi));
                contacts.push_back({u, v, ts, te});
            }
            continue;
        }
        if (k > tau / 2) {
            throw std::invalid_argument("cannot place " + std::to_string(k) + " disjoint intervals in lifetime " +
                                        std::to_string(tau));
        }
        // Floyd's sampling of 2k distinct instants; consecutive pairs become intervals.
        chosen.clear();
        points.clear();
        for (std::uint64_t j = tau - 2 * k + 1; j <= tau; ++j) {
            auto t = static_cast<std::uint32_t>(rng.between(1, j));
            if (!chosen.insert(t).second) {
                t = static_cast<std::uint32_t>(j);
                chosen.insert(t);
            }
            points.push_back(t);
        }
        std::sort(points.begin(), points.end());
        for (std::size_t j = 0; j < points.size(); j += 2) contacts.push_back({u, v, points[j], points[j + 1]});
    }
    return make_contact_set(std::move(contacts), 4, TimeModel::interval, spec.vertices, spec.lifetime);
}

ContactSet generate(const GenSpec& spec) {
    auto edges = spec.topology == Topology::ba ? gen_ba_aggregated(spec) : gen_random_aggregated(spec);
    return assign_contacts(edges, spec);
}

// ---------------------------------------------------------------------------

DatasetStats dataset_stats(const ContactSet& cs) {
    DatasetStats s;
    s.vertices = cs.vertices;
    s.lifetime = cs.lifetime;
    s.contacts = cs.size();
    s.arity = cs.arity;
    // Contacts are sorted by (u, v, ...), so distinct edges are adjacent.
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i == 0 || cs.contacts[i].u != cs.contacts[i - 1].u || cs.contacts[i].v != cs.contacts[i - 1].v) ++s.edges;
    }
    if (s.vertices > 0) {
        s.contacts_per_vertex = static_cast<double>(s.contacts) / static_cast<double>(s.vertices);
        s.edges_per_vertex = static_cast<double>(s.edges) / static_cast<double>(s.vertices);
    }
    if (s.edges > 0) s.contacts_per_edge = static_cast<double>(s.contacts) / static_cast<double>(s.edges);
    s.size_u32_bits = s.contacts * s.arity * 32;
    std::uint64_t time_terms = s.arity - 2;
    s.size_b_bits = s.contacts * (2 * ceil_log2(std::max<std::uint64_t>(1, s.vertices)) +
                                  time_terms * ceil_log2(std::max<std::uint64_t>(1, s.lifetime)));
    return s;
}

void write_stats_table(std::ostream& out, const std::string& name, const DatasetStats& s) {
    auto flags = out.flags();
    out << std::left << std::setw(16) << "dataset" << std::right << std::setw(10) << "vertices" << std::setw(12)
        << "edges" << std::setw(10) << "lifetime" << std::setw(12) << "contacts" << std::setw(10) << "c/v"
        << std::setw(10) << "e/v" << std::setw(8) << "c/e" << std::setw(14) << "size_u32" << std::setw(14)
        << "size_b" << '\n';
    out << std::left << std::setw(16) << name << std::right << std::setw(10) << s.vertices << std::setw(12)
        << s.edges << std::setw(10) << s.lifetime << std::setw(12) << s.contacts << std::fixed
        << std::setprecision(1) << std::setw(10) << s.contacts_per_vertex << std::setw(10) << s.edges_per_vertex
        << std::setprecision(2) << std::setw(8) << s.contacts_per_edge << std::setw(14) << s.size_u32_bits
        << std::setw(14) << s.size_b_bits << '\n';
    out.flags(flags);
}

void write_stats_kv(std::ostream& out, const DatasetStats& s) {
    out << "vertices\t" << s.vertices << '\n'
        << "edges\t" << s.edges << '\n'
        << "lifetime\t" << s.lifetime << '\n'
        << "contacts\t" << s.contacts << '\n'
        << "arity\t" << s.arity << '\n'
        << "contacts_per_vertex\t" << s.contacts_per_vertex << '\n'
        << "edges_per_vertex\t" << s.edges_per_vertex << '\n'
        << "contacts_per_edge\t" << s.contacts_per_edge << '\n'
        << "size_u32_bits\t" << s.size_u32_bits << '\n'
        << "size_b_bits\t" << s.size_b_bits << '\n';
}

}  // namespace tgcsa
