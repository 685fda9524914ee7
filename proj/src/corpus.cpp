#include "tgcsa/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace tgcsa {

const char* to_string(TimeModel m) {
    switch (m) {
        case TimeModel::interval: return "interval";
        case TimeModel::incremental: return "incremental";
        case TimeModel::point: return "point";
    }
    return "?";
}

TimeModel time_model_from_string(const std::string& s) {
    if (s == "interval") return TimeModel::interval;
    if (s == "incremental") return TimeModel::incremental;
    if (s == "point") return TimeModel::point;
    throw std::invalid_argument("unknown time model '" + s + "'");
}

namespace {

void check_shape(unsigned arity, TimeModel model) {
    if (arity == 4 && model != TimeModel::interval) {
        throw std::invalid_argument("arity 4 requires the interval time model");
    }
    if (arity == 3 && model == TimeModel::interval) {
        throw std::invalid_argument("arity 3 requires the incremental or point time model");
    }
    if (arity != 3 && arity != 4) throw std::invalid_argument("arity must be 3 or 4");
}

// Returns an empty string when the contact is acceptable.
std::string contact_problem(const Contact& c, unsigned arity) {
    if (c.u == 0 || c.v == 0 || c.ts == 0) return "ids and instants are 1-based";
    if (arity == 4) {
        if (c.te == 0) return "ids and instants are 1-based";
        if (c.ts >= c.te) return "empty interval: start time " + std::to_string(c.ts) +
                                 " is not before end time " + std::to_string(c.te);
    }
    return {};
}

}  // namespace

ContactSet make_contact_set(std::vector<Contact> contacts, unsigned arity, TimeModel model,
                            std::uint32_t vertices, std::uint32_t lifetime) {
    check_shape(arity, model);
    std::uint32_t max_vertex = 0;
    std::uint32_t max_time = 0;
    for (auto& c : contacts) {
        if (arity == 3) c.te = 0;
        if (auto p = contact_problem(c, arity); !p.empty()) throw std::invalid_argument(p);
        max_vertex = std::max({max_vertex, c.u, c.v});
        max_time = std::max({max_time, c.ts, c.te});
    }
    if (vertices == 0) vertices = max_vertex;
    if (lifetime == 0) lifetime = max_time;
    if (max_vertex > vertices) {
        throw std::invalid_argument("vertex " + std::to_string(max_vertex) + " exceeds vertex universe " +
                                    std::to_string(vertices));
    }
    if (max_time > lifetime) {
        throw std::invalid_argument("instant " + std::to_string(max_time) + " exceeds lifetime " +
                                    std::to_string(lifetime));
    }
    std::sort(contacts.begin(), contacts.end());
    return ContactSet{std::move(contacts), vertices, lifetime, arity, model};
}

ContactSet parse_contacts(std::istream& in, const ParseOptions& opts) {
    check_shape(opts.arity, opts.model);
    std::vector<Contact> contacts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::uint32_t vals[4] = {0, 0, 0, 0};
        unsigned count = 0;
        const char* p = line.data();
        const char* end = p + line.size();
        while (true) {
            while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
            if (p == end) break;
            std::uint64_t v = 0;
            auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
                throw ParseError(lineno, "expected a decimal integer");
            }
            if (v > std::numeric_limits<std::uint32_t>::max()) throw ParseError(lineno, "value exceeds 32 bits");
            if (count == opts.arity) {
                throw ParseError(lineno, "column mismatch: expected " + std::to_string(opts.arity) + " values");
            }
            vals[count++] = static_cast<std::uint32_t>(v);
            p = next;
        }
        if (count == 0) continue;
        if (count != opts.arity) {
            throw ParseError(lineno, "column mismatch: expected " + std::to_string(opts.arity) + " values, found " +
                                         std::to_string(count));
        }
        Contact c{vals[0], vals[1], vals[2], opts.arity == 4 ? vals[3] : 0};
        if (auto prob = contact_problem(c, opts.arity); !prob.empty()) throw ParseError(lineno, prob);
        contacts.push_back(c);
    }
    return make_contact_set(std::move(contacts), opts.arity, opts.model, opts.vertices, opts.lifetime);
}

ContactSet parse_contacts(const std::string& text, const ParseOptions& opts) {
    std::istringstream in(text);
    return parse_contacts(in, opts);
}

ContactSet to_arity3(const ContactSet& cs, TimeModel model) {
    if (cs.arity != 4) throw std::invalid_argument("to_arity3 expects an arity-4 contact set");
    std::vector<Contact> out;
    out.reserve(cs.size());
    for (const auto& c : cs.contacts) out.push_back({c.u, c.v, c.ts, 0});
    return make_contact_set(std::move(out), 3, model, cs.vertices, cs.lifetime);
}

void write_contacts(std::ostream& out, const ContactSet& cs) {
    for (const auto& c : cs.contacts) {
        out << c.u << ' ' << c.v << ' ' << c.ts;
        if (cs.arity == 4) out << ' ' << c.te;
        out << '\n';
    }
}

// ---------------------------------------------------------------------------

unsigned AlphabetMap::index(Section s) const {
    auto k = static_cast<unsigned>(s);
    if (k < 1 || k > arity_) throw std::invalid_argument("section not present at this arity");
    return k - 1;
}

std::uint64_t AlphabetMap::universe(Section s) const {
    (void)index(s);
    return (s == Section::source || s == Section::target) ? vertices_ : lifetime_;
}

void AlphabetMap::fill_gaps() {
    std::uint64_t nu = vertices_;
    std::uint64_t tau = lifetime_;
    gaps_ = {0, nu, 2 * nu, arity_ == 4 ? 2 * nu + tau : 0};
}

AlphabetMap AlphabetMap::build(const ContactSet& cs) {
    AlphabetMap am;
    am.vertices_ = cs.vertices;
    am.lifetime_ = cs.lifetime;
    am.arity_ = cs.arity;
    am.fill_gaps();
    std::uint64_t len = 2ULL * cs.vertices + (cs.arity == 4 ? 2ULL : 1ULL) * cs.lifetime;
    std::vector<std::uint64_t> ones;
    ones.reserve(cs.size() * cs.arity);
    for (const auto& c : cs.contacts) {
        ones.push_back(c.u + am.gaps_[0]);
        ones.push_back(c.v + am.gaps_[1]);
        ones.push_back(c.ts + am.gaps_[2]);
        if (cs.arity == 4) ones.push_back(c.te + am.gaps_[3]);
    }
    am.b_ = BitSequence::from_positions(len, ones);
    return am;
}

std::uint64_t AlphabetMap::getmap(std::uint64_t value, Section s) const {
    auto k = index(s);
    if (value < 1 || value > universe(s)) throw std::out_of_range("getmap: value outside its universe");
    std::uint64_t slot = value + gaps_[k];
    return b_.get(slot) ? b_.rank1_unchecked(slot) : 0;
}

std::uint64_t AlphabetMap::getmap_floor(std::uint64_t value, Section s) const {
    auto k = index(s);
    value = std::min(value, universe(s));
    return b_.rank1_unchecked(value + gaps_[k]);
}

std::uint64_t AlphabetMap::getunmap(std::uint64_t id, Section s) const {
    auto k = index(s);
    if (id < 1 || id > sigma()) throw std::out_of_range("getunmap: id outside [1, sigma]");
    std::uint64_t slot = b_.select1(id);
    if (slot <= gaps_[k] || slot - gaps_[k] > universe(s)) {
        throw std::invalid_argument("getunmap: id " + std::to_string(id) + " does not belong to section " +
                                    std::to_string(k + 1));
    }
    return slot - gaps_[k];
}

Section AlphabetMap::section_of(std::uint64_t id) const {
    if (id < 1 || id > sigma()) throw std::out_of_range("section_of: id outside [1, sigma]");
    std::uint64_t slot = b_.select1(id);
    for (unsigned k = arity_; k >= 1; --k) {
        if (slot > gaps_[k - 1]) return static_cast<Section>(k);
    }
    return Section::source;
}

void AlphabetMap::serialize(ByteWriter& out) const {
    out.put_u32(vertices_);
    out.put_u32(lifetime_);
    out.put_u64(arity_);
    b_.serialize(out);
}

AlphabetMap AlphabetMap::deserialize(ByteReader& in) {
    AlphabetMap am;
    am.vertices_ = in.get_u32();
    am.lifetime_ = in.get_u32();
    std::uint64_t arity = in.get_u64();
    if (arity != 3 && arity != 4) throw FormatError("alphabet map arity must be 3 or 4");
    am.arity_ = static_cast<unsigned>(arity);
    am.fill_gaps();
    am.b_ = BitSequence::deserialize(in);
    std::uint64_t expect = 2ULL * am.vertices_ + (am.arity_ == 4 ? 2ULL : 1ULL) * am.lifetime_;
    if (am.b_.size() != expect) throw FormatError("alphabet bitmap length does not match universes");
    return am;
}

std::vector<std::uint64_t> build_sid(const ContactSet& cs, const AlphabetMap& am) {
    std::vector<std::uint64_t> sid;
    sid.reserve(cs.size() * cs.arity);
    for (const auto& c : cs.contacts) {
        sid.push_back(am.getmap(c.u, Section::source));
        sid.push_back(am.getmap(c.v, Section::target));
        sid.push_back(am.getmap(c.ts, Section::start));
        if (cs.arity == 4) sid.push_back(am.getmap(c.te, Section::end));
    }
    return sid;
}

}  // namespace tgcsa
