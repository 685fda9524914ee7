#include "tgcsa/baseline.hpp"

#include <algorithm>
#include <stdexcept>

#include "tgcsa/vbyte.hpp"

namespace tgcsa {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_interval(std::uint32_t t, std::uint32_t t_end) {
    if (t < 1 || t >= t_end) throw std::invalid_argument("interval [t, t_end) must be non-empty and 1-based");
}

}  // namespace

// ---------------------------------------------------------------------------
// Oracle

std::uint64_t OracleIndex::end_of(const Contact& c) const {
    if (cs_.arity == 4) return c.te;
    if (cs_.model == TimeModel::point) return std::uint64_t{c.ts} + 1;
    return std::numeric_limits<std::uint64_t>::max();
}

VertexSet OracleIndex::direct(std::uint32_t u, TimeSemantics sem) const {
    VertexSet out;
    for (const auto& c : cs_.contacts) {
        if (c.u == u && contact_matches(c.ts, end_of(c), sem)) out.push_back(c.v);
    }
    sort_unique(out);
    return out;
}

VertexSet OracleIndex::reverse(std::uint32_t v, TimeSemantics sem) const {
    VertexSet out;
    for (const auto& c : cs_.contacts) {
        if (c.v == v && contact_matches(c.ts, end_of(c), sem)) out.push_back(c.u);
    }
    sort_unique(out);
    return out;
}

bool OracleIndex::active(std::uint32_t u, std::uint32_t v, TimeSemantics sem) const {
    return std::any_of(cs_.contacts.begin(), cs_.contacts.end(), [&](const Contact& c) {
        return c.u == u && c.v == v && contact_matches(c.ts, end_of(c), sem);
    });
}

EdgeSet OracleIndex::snapshot(TimeSemantics sem) const {
    EdgeSet out;
    for (const auto& c : cs_.contacts) {
        if (contact_matches(c.ts, end_of(c), sem)) out.emplace_back(c.u, c.v);
    }
    sort_unique(out);
    return out;
}

EdgeSet OracleIndex::activated(std::uint32_t t, std::uint32_t t_end) const {
    check_interval(t, t_end);
    EdgeSet out;
    for (const auto& c : cs_.contacts) {
        if (c.ts >= t && c.ts < t_end) out.emplace_back(c.u, c.v);
    }
    sort_unique(out);
    return out;
}

EdgeSet OracleIndex::deactivated(std::uint32_t t, std::uint32_t t_end) const {
    check_interval(t, t_end);
    if (cs_.arity == 3 && cs_.model == TimeModel::incremental) {
        throw std::logic_error("deactivated_edges is undefined for incremental graphs");
    }
    EdgeSet out;
    for (const auto& c : cs_.contacts) {
        std::uint64_t te = end_of(c);
        if (te >= t && te < t_end) out.emplace_back(c.u, c.v);
    }
    sort_unique(out);
    return out;
}

// ---------------------------------------------------------------------------
// EdgeLog

EdgeLogIndex EdgeLogIndex::build(const ContactSet& cs) {
    if (cs.arity != 4) throw std::invalid_argument("edgelog requires 4-term contacts");
    EdgeLogIndex el;
    el.vertices_ = cs.vertices;
    el.lifetime_ = cs.lifetime;
    el.n_ = cs.size();

    const std::uint32_t nu = cs.vertices;
    std::vector<std::uint64_t> adj_off(nu + 1, 0);
    std::vector<std::uint64_t> edge_base(nu + 1, 0);
    std::vector<std::uint64_t> time_off{0};
    std::vector<std::vector<std::uint32_t>> rev(nu + 1);

    const auto& c = cs.contacts;  // sorted by (u, v, ts, te)
    std::size_t i = 0;
    for (std::uint32_t u = 1; u <= nu; ++u) {
        adj_off[u - 1] = el.adj_.size();
        edge_base[u - 1] = el.edges_;
        std::uint32_t prev_v = 0;
        while (i < c.size() && c[i].u == u) {
            std::uint32_t v = c[i].v;
            std::size_t j = i;
            while (j < c.size() && c[j].u == u && c[j].v == v) ++j;
            for (std::size_t k = i + 1; k < j; ++k) {
                if (c[k].ts < c[k - 1].te) {
                    throw std::invalid_argument("overlapping contacts unsupported on edge (" + std::to_string(u) +
                                                "," + std::to_string(v) + ")");
                }
            }
            vbyte::encode(v - prev_v, el.adj_);
            prev_v = v;
            rev[v].push_back(u);

            vbyte::encode(j - i, el.times_);
            std::uint32_t prev_t = 0;
            for (std::size_t k = i; k < j; ++k) {
                vbyte::encode(c[k].ts - prev_t, el.times_);
                vbyte::encode(c[k].te - c[k].ts, el.times_);
                prev_t = c[k].te;
            }
            time_off.push_back(el.times_.size());
            ++el.edges_;
            i = j;
        }
    }
    adj_off[nu] = el.adj_.size();
    edge_base[nu] = el.edges_;

    std::vector<std::uint64_t> rev_off(nu + 1, 0);
    for (std::uint32_t v = 1; v <= nu; ++v) {
        rev_off[v - 1] = el.rev_.size();
        std::uint32_t prev = 0;
        for (auto u : rev[v]) {
            vbyte::encode(u - prev, el.rev_);
            prev = u;
        }
    }
    rev_off[nu] = el.rev_.size();

    el.adj_off_ = IntVector::from_values(adj_off);
    el.edge_base_ = IntVector::from_values(edge_base);
    el.time_off_ = IntVector::from_values(time_off);
    el.rev_off_ = IntVector::from_values(rev_off);
    return el;
}

std::uint64_t EdgeLogIndex::size_bits() const {
    return 8 * (adj_.size() + times_.size() + rev_.size()) + adj_off_.size_bits() + edge_base_.size_bits() +
           time_off_.size_bits() + rev_off_.size_bits();
}

std::vector<std::uint32_t> EdgeLogIndex::neighbors(std::uint32_t u) const {
    std::vector<std::uint32_t> out;
    if (!valid_vertex(u)) return out;
    const std::uint8_t* p = adj_.data() + adj_off_[u - 1];
    const std::uint8_t* end = adj_.data() + adj_off_[u];
    std::uint32_t v = 0;
    while (p < end) {
        v += static_cast<std::uint32_t>(vbyte::decode_unchecked(p));
        out.push_back(v);
    }
    return out;
}

std::vector<std::uint32_t> EdgeLogIndex::reverse_list(std::uint32_t v) const {
    std::vector<std::uint32_t> out;
    if (!valid_vertex(v)) return out;
    const std::uint8_t* p = rev_.data() + rev_off_[v - 1];
    const std::uint8_t* end = rev_.data() + rev_off_[v];
    std::uint32_t u = 0;
    while (p < end) {
        u += static_cast<std::uint32_t>(vbyte::decode_unchecked(p));
        out.push_back(u);
    }
    return out;
}

std::vector<std::uint32_t> EdgeLogIndex::time_list(std::uint64_t edge) const {
    const std::uint8_t* p = times_.data() + time_off_[edge];
    std::uint64_t k = vbyte::decode_unchecked(p);
    std::vector<std::uint32_t> out;
    out.reserve(2 * k);
    std::uint32_t t = 0;
    for (std::uint64_t j = 0; j < 2 * k; ++j) {
        t += static_cast<std::uint32_t>(vbyte::decode_unchecked(p));
        out.push_back(t);
    }
    return out;
}

bool EdgeLogIndex::edge_matches(std::uint64_t edge, const TimeSemantics& sem) const {
    const std::uint8_t* p = times_.data() + time_off_[edge];
    std::uint64_t k = vbyte::decode_unchecked(p);
    std::uint64_t t = 0;
    for (std::uint64_t j = 0; j < k; ++j) {
        std::uint64_t ts = t + vbyte::decode_unchecked(p);
        std::uint64_t te = ts + vbyte::decode_unchecked(p);
        if (contact_matches(ts, te, sem)) return true;
        // Lists are increasing: nothing later can start at or before max_start.
        if (ts > sem.max_start()) return false;
        t = te;
    }
    return false;
}

std::uint64_t EdgeLogIndex::find_edge(std::uint32_t u, std::uint32_t v) const {
    if (!valid_vertex(u)) return npos;
    const std::uint8_t* p = adj_.data() + adj_off_[u - 1];
    const std::uint8_t* end = adj_.data() + adj_off_[u];
    std::uint64_t e = edge_base_[u - 1];
    std::uint32_t w = 0;
    while (p < end) {
        w += static_cast<std::uint32_t>(vbyte::decode_unchecked(p));
        if (w == v) return e;
        if (w > v) return npos;
        ++e;
    }
    return npos;
}

template <typename Fn>
void EdgeLogIndex::for_each_edge(Fn&& fn) const {
    for (std::uint32_t u = 1; u <= vertices_; ++u) {
        const std::uint8_t* p = adj_.data() + adj_off_[u - 1];
        const std::uint8_t* end = adj_.data() + adj_off_[u];
        std::uint64_t e = edge_base_[u - 1];
        std::uint32_t v = 0;
        while (p < end) {
            v += static_cast<std::uint32_t>(vbyte::decode_unchecked(p));
            fn(u, v, e++);
        }
    }
}

VertexSet EdgeLogIndex::direct(std::uint32_t u, TimeSemantics sem) const {
    VertexSet out;
    if (!valid_vertex(u)) return out;
    std::uint64_t e = edge_base_[u - 1];
    for (auto v : neighbors(u)) {
        if (edge_matches(e++, sem)) out.push_back(v);
    }
    return out;
}

VertexSet EdgeLogIndex::reverse(std::uint32_t v, TimeSemantics sem) const {
    VertexSet out;
    for (auto u : reverse_list(v)) {
        std::uint64_t e = find_edge(u, v);
        if (e != npos && edge_matches(e, sem)) out.push_back(u);
    }
    return out;
}

bool EdgeLogIndex::active(std::uint32_t u, std::uint32_t v, TimeSemantics sem) const {
    std::uint64_t e = find_edge(u, v);
    return e != npos && edge_matches(e, sem);
}

EdgeSet EdgeLogIndex::snapshot(TimeSemantics sem) const {
    EdgeSet out;
    for_each_edge([&](std::uint32_t u, std::uint32_t v, std::uint64_t e) {
        if (edge_matches(e, sem)) out.emplace_back(u, v);
    });
    return out;
}

EdgeSet EdgeLogIndex::activated(std::uint32_t t, std::uint32_t t_end) const {
    check_interval(t, t_end);
    EdgeSet out;
    for_each_edge([&](std::uint32_t u, std::uint32_t v, std::uint64_t e) {
        auto times = time_list(e);
        for (std::size_t j = 0; j < times.size(); j += 2) {
            if (times[j] >= t && times[j] < t_end) {
                out.emplace_back(u, v);
                break;
            }
        }
    });
    return out;
}

EdgeSet EdgeLogIndex::deactivated(std::uint32_t t, std::uint32_t t_end) const {
    check_interval(t, t_end);
    EdgeSet out;
    for_each_edge([&](std::uint32_t u, std::uint32_t v, std::uint64_t e) {
        auto times = time_list(e);
        for (std::size_t j = 1; j < times.size(); j += 2) {
            if (times[j] >= t && times[j] < t_end) {
                out.emplace_back(u, v);
                break;
            }
        }
    });
    return out;
}

void EdgeLogIndex::serialize(ByteWriter& out) const {
    out.put_u32(vertices_);
    out.put_u32(lifetime_);
    out.put_u64(n_);
    out.put_u64(edges_);
    for (const auto* stream : {&adj_, &times_, &rev_}) {
        out.put_u64(stream->size());
        out.put_bytes(*stream);
        out.align8();
    }
    adj_off_.serialize(out);
    edge_base_.serialize(out);
    time_off_.serialize(out);
    rev_off_.serialize(out);
}

EdgeLogIndex EdgeLogIndex::deserialize(ByteReader& in) {
    EdgeLogIndex el;
    el.vertices_ = in.get_u32();
    el.lifetime_ = in.get_u32();
    el.n_ = in.get_u64();
    el.edges_ = in.get_u64();
    for (auto* stream : {&el.adj_, &el.times_, &el.rev_}) {
        std::uint64_t len = in.get_u64();
        if (len > in.remaining()) throw FormatError("edgelog stream exceeds data");
        auto bytes = in.get_bytes(len);
        stream->assign(bytes.begin(), bytes.end());
        in.align8();
    }
    el.adj_off_ = IntVector::deserialize(in);
    el.edge_base_ = IntVector::deserialize(in);
    el.time_off_ = IntVector::deserialize(in);
    el.rev_off_ = IntVector::deserialize(in);
    const std::uint64_t nu = el.vertices_;
    if (el.adj_off_.size() != nu + 1 || el.edge_base_.size() != nu + 1 || el.rev_off_.size() != nu + 1 ||
        el.time_off_.size() != el.edges_ + 1) {
        throw FormatError("edgelog offset arrays disagree with header");
    }
    if (el.adj_off_[nu] != el.adj_.size() || el.rev_off_[nu] != el.rev_.size() ||
        el.time_off_[el.edges_] != el.times_.size() || el.edge_base_[nu] != el.edges_) {
        throw FormatError("edgelog offsets disagree with stream sizes");
    }
    return el;
}

}  // namespace tgcsa
