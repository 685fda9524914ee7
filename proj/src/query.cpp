#include "tgcsa/query.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgcsa {

TimeSemantics TimeSemantics::at(std::uint32_t t) {
    if (t < 1) throw std::invalid_argument("time instants are 1-based");
    return {Kind::instant, t, 0};
}

TimeSemantics TimeSemantics::strong(std::uint32_t t, std::uint32_t t_end) {
    if (t < 1 || t >= t_end) throw std::invalid_argument("interval [t, t_end) must be non-empty and 1-based");
    return {Kind::strong, t, t_end};
}

TimeSemantics TimeSemantics::weak(std::uint32_t t, std::uint32_t t_end) {
    if (t < 1 || t >= t_end) throw std::invalid_argument("interval [t, t_end) must be non-empty and 1-based");
    return {Kind::weak, t, t_end};
}

// ts <= t and te >= t_end  <=>  ts <= t and te > t_end - 1 (strong)
// ts < t_end and te > t    <=>  ts <= t_end - 1 and te > t (weak)
std::uint64_t TimeSemantics::max_start() const {
    return kind == Kind::weak ? std::uint64_t{t_end} - 1 : t;
}

std::uint64_t TimeSemantics::end_after() const {
    return kind == Kind::strong ? std::uint64_t{t_end} - 1 : t;
}

namespace {

// Number of A-order entries whose symbol id is <= id.
std::uint64_t prefix_end(const TgcsaIndex& idx, std::uint64_t id) {
    if (id == 0) return 0;
    if (id >= idx.sigma()) return idx.length();
    return idx.d().select1(id + 1) - 1;
}

std::uint64_t section_begin(const TgcsaIndex& idx, Section s) {
    return (static_cast<std::uint64_t>(s) - 1) * idx.contacts();
}

// Start entries y in (start_lo, start_hi]; for 4-term contacts the end entry
// must also satisfy z > end_rt.
struct Window {
    std::uint64_t start_lo = 0;
    std::uint64_t start_hi = 0;
    bool check_end = false;
    std::uint64_t end_rt = 0;

    [[nodiscard]] bool admits_start(std::uint64_t y) const { return y > start_lo && y <= start_hi; }
};

Window window_for(const TgcsaIndex& idx, const TimeSemantics& sem) {
    const auto& am = idx.alphabet();
    Window w;
    w.start_lo = section_begin(idx, Section::start);
    w.start_hi = prefix_end(idx, am.getmap_floor(sem.max_start(), Section::start));
    switch (idx.model()) {
        case TimeModel::interval:
            w.check_end = true;
            w.end_rt = prefix_end(idx, am.getmap_floor(sem.end_after(), Section::end));
            break;
        case TimeModel::incremental:
            break;
        case TimeModel::point:
            // te = ts + 1, so te > end_after  <=>  ts >= end_after.
            w.start_lo = std::max(w.start_lo, prefix_end(idx, am.getmap_floor(sem.end_after() - 1, Section::start)));
            break;
    }
    return w;
}

class PsiReader {
public:
    PsiReader(const TgcsaIndex& idx, QueryStats* stats) : idx_(idx), stats_(stats) {}

    std::uint64_t operator()(std::uint64_t i) const {
        if (stats_) ++stats_->random;
        return idx_.psi(i);
    }

    // Calls fn(i, Ψ[i]) for i in [l, r] using buffered decoding.
    template <typename Fn>
    void for_range(std::uint64_t l, std::uint64_t r, Fn&& fn) {
        if (l > r) return;
        if (stats_) stats_->candidates += r - l + 1;
        constexpr std::uint64_t kChunk = 4096;
        for (std::uint64_t lo = l; lo <= r; lo += kChunk) {
            std::uint64_t hi = std::min(r, lo + kChunk - 1);
            buf_.resize(hi - lo + 1);
            idx_.psi_range(lo, hi, buf_);
            if (stats_) stats_->buffered += hi - lo + 1;
            for (std::uint64_t i = lo; i <= hi; ++i) {
                if (!fn(i, buf_[i - lo])) return;
            }
        }
    }

private:
    const TgcsaIndex& idx_;
    QueryStats* stats_;
    std::vector<std::uint64_t> buf_;
};

std::uint32_t unmap_at(const TgcsaIndex& idx, std::uint64_t pos, Section s) {
    return static_cast<std::uint32_t>(idx.alphabet().getunmap(idx.d().rank1_unchecked(pos), s));
}

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool vertex_in_universe(const TgcsaIndex& idx, std::uint32_t v) {
    return v >= 1 && v <= idx.alphabet().vertices();
}

// Edges of contacts whose start entries lie in (lo, hi].
EdgeSet edges_from_start_entries(const TgcsaIndex& idx, std::uint64_t lo, std::uint64_t hi, QueryStats* stats) {
    EdgeSet out;
    PsiReader psi(idx, stats);
    psi.for_range(lo + 1, hi, [&](std::uint64_t, std::uint64_t next) {
        std::uint64_t x = idx.arity() == 4 ? psi(next) : next;
        std::uint64_t y = psi(x);
        out.emplace_back(unmap_at(idx, x, Section::source), unmap_at(idx, y, Section::target));
        return true;
    });
    sort_unique(out);
    return out;
}

// Edges of contacts whose end entries lie in (lo, hi].
EdgeSet edges_from_end_entries(const TgcsaIndex& idx, std::uint64_t lo, std::uint64_t hi, QueryStats* stats) {
    EdgeSet out;
    PsiReader psi(idx, stats);
    psi.for_range(lo + 1, hi, [&](std::uint64_t, std::uint64_t x) {
        std::uint64_t y = psi(x);
        out.emplace_back(unmap_at(idx, x, Section::source), unmap_at(idx, y, Section::target));
        return true;
    });
    sort_unique(out);
    return out;
}

// Start entries with ts in [a, b], a >= 1.
std::pair<std::uint64_t, std::uint64_t> start_entries(const TgcsaIndex& idx, std::uint64_t a, std::uint64_t b) {
    const auto& am = idx.alphabet();
    std::uint64_t lo = std::max(section_begin(idx, Section::start),
                                prefix_end(idx, am.getmap_floor(a - 1, Section::start)));
    std::uint64_t hi = prefix_end(idx, am.getmap_floor(b, Section::start));
    return {lo, std::max(lo, hi)};
}

}  // namespace

SymbolRange symbol_range(const TgcsaIndex& idx, std::uint64_t id) {
    if (id == 0 || id > idx.sigma()) return {};
    return {idx.d().select1(id), prefix_end(idx, id)};
}

SymbolRange pattern_range(const TgcsaIndex& idx, std::span<const std::uint64_t> ids, QueryStats* stats) {
    if (ids.empty() || ids.size() > idx.arity()) throw std::invalid_argument("pattern length must be 1..arity");
    for (auto id : ids) {
        if (id == 0 || id > idx.sigma()) return {};
    }
    const auto& am = idx.alphabet();
    auto first = static_cast<unsigned>(am.section_of(ids[0]));
    if (first + ids.size() - 1 > idx.arity()) throw std::invalid_argument("pattern wraps past the last section");
    for (std::size_t k = 1; k < ids.size(); ++k) {
        if (static_cast<unsigned>(am.section_of(ids[k])) != first + k) {
            throw std::invalid_argument("pattern symbols are not from consecutive sections");
        }
    }

    SymbolRange range = symbol_range(idx, ids[0]);
    for (std::size_t k = 1; k < ids.size() && !range.empty(); ++k) {
        SymbolRange target = symbol_range(idx, ids[k]);
        auto hop = [&](std::uint64_t i) {
            for (std::size_t s = 0; s < k; ++s) {
                if (stats) ++stats->search;
                i = idx.psi(i);
            }
            return i;
        };
        // First position whose k-th successor is >= bound.
        auto lower = [&](std::uint64_t bound) {
            std::uint64_t lo = range.l;
            std::uint64_t hi = range.r + 1;
            while (lo < hi) {
                std::uint64_t mid = lo + (hi - lo) / 2;
                if (hop(mid) < bound) {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            return lo;
        };
        std::uint64_t l = lower(target.l);
        std::uint64_t r = lower(target.r + 1);
        range = SymbolRange{l, r - 1};
    }
    return range;
}

std::pair<std::uint64_t, std::uint64_t> time_bounds(const TgcsaIndex& idx, std::uint32_t t) {
    if (t < 1 || t > idx.alphabet().lifetime()) throw std::out_of_range("time instant outside the lifetime");
    const auto& am = idx.alphabet();
    std::uint64_t rt_s = prefix_end(idx, am.getmap_floor(t, Section::start));
    std::uint64_t rt_e = idx.arity() == 4 ? prefix_end(idx, am.getmap_floor(t, Section::end)) : idx.length();
    return {rt_s, rt_e};
}

VertexSet direct_neighbors(const TgcsaIndex& idx, std::uint32_t vertex, TimeSemantics sem, QueryStats* stats) {
    if (!vertex_in_universe(idx, vertex)) return {};
    std::uint64_t u = idx.alphabet().getmap(vertex, Section::source);
    if (u == 0) return {};
    SymbolRange range = symbol_range(idx, u);
    Window w = window_for(idx, sem);
    VertexSet out;
    PsiReader psi(idx, stats);
    psi.for_range(range.l, range.r, [&](std::uint64_t, std::uint64_t x) {
        std::uint64_t y = psi(x);
        if (!w.admits_start(y)) return true;
        if (w.check_end && psi(y) <= w.end_rt) return true;
        out.push_back(unmap_at(idx, x, Section::target));
        return true;
    });
    sort_unique(out);
    return out;
}

VertexSet reverse_neighbors(const TgcsaIndex& idx, std::uint32_t vertex, TimeSemantics sem, QueryStats* stats) {
    if (!vertex_in_universe(idx, vertex)) return {};
    std::uint64_t v = idx.alphabet().getmap(vertex, Section::target);
    if (v == 0) return {};
    SymbolRange range = symbol_range(idx, v);
    Window w = window_for(idx, sem);
    VertexSet out;
    PsiReader psi(idx, stats);
    psi.for_range(range.l, range.r, [&](std::uint64_t, std::uint64_t y) {
        if (!w.admits_start(y)) return true;
        std::uint64_t next = psi(y);
        if (w.check_end) {
            if (next <= w.end_rt) return true;
            next = psi(next);
        }
        out.push_back(unmap_at(idx, next, Section::source));
        return true;
    });
    sort_unique(out);
    return out;
}

bool active_edge(const TgcsaIndex& idx, std::uint32_t u, std::uint32_t v, TimeSemantics sem, QueryStats* stats) {
    if (!vertex_in_universe(idx, u) || !vertex_in_universe(idx, v)) return false;
    const auto& am = idx.alphabet();
    std::uint64_t ids[2] = {am.getmap(u, Section::source), am.getmap(v, Section::target)};
    if (ids[0] == 0 || ids[1] == 0) return false;
    SymbolRange range = pattern_range(idx, ids, stats);
    Window w = window_for(idx, sem);
    bool found = false;
    PsiReader psi(idx, stats);
    psi.for_range(range.l, range.r, [&](std::uint64_t, std::uint64_t x) {
        std::uint64_t y = psi(x);
        if (!w.admits_start(y)) return true;
        if (w.check_end && psi(y) <= w.end_rt) return true;
        found = true;
        return false;
    });
    return found;
}

EdgeSet snapshot(const TgcsaIndex& idx, TimeSemantics sem, QueryStats* stats) {
    Window w = window_for(idx, sem);
    EdgeSet out;
    PsiReader psi(idx, stats);
    psi.for_range(w.start_lo + 1, w.start_hi, [&](std::uint64_t, std::uint64_t next) {
        if (w.check_end) {
            if (next <= w.end_rt) return true;
            next = psi(next);
        }
        std::uint64_t y = psi(next);
        out.emplace_back(unmap_at(idx, next, Section::source), unmap_at(idx, y, Section::target));
        return true;
    });
    sort_unique(out);
    return out;
}

std::vector<Contact> snapshot_contacts(const TgcsaIndex& idx, TimeSemantics sem) {
    Window w = window_for(idx, sem);
    std::vector<Contact> out;
    PsiReader psi(idx, nullptr);
    psi.for_range(w.start_lo + 1, w.start_hi, [&](std::uint64_t i, std::uint64_t next) {
        if (w.check_end && next <= w.end_rt) return true;
        out.push_back(reconstruct_contact(idx, i));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

EdgeSet activated_edges(const TgcsaIndex& idx, std::uint32_t t, QueryStats* stats) {
    if (t < 1 || t > idx.alphabet().lifetime()) return {};
    SymbolRange range = symbol_range(idx, idx.alphabet().getmap(t, Section::start));
    if (range.empty()) return {};
    return edges_from_start_entries(idx, range.l - 1, range.r, stats);
}

EdgeSet activated_edges(const TgcsaIndex& idx, std::uint32_t t, std::uint32_t t_end, QueryStats* stats) {
    if (t < 1 || t >= t_end) throw std::invalid_argument("interval [t, t_end) must be non-empty and 1-based");
    auto [lo, hi] = start_entries(idx, t, std::uint64_t{t_end} - 1);
    return edges_from_start_entries(idx, lo, hi, stats);
}

EdgeSet deactivated_edges(const TgcsaIndex& idx, std::uint32_t t, QueryStats* stats) {
    if (t < 1) throw std::invalid_argument("time instants are 1-based");
    return deactivated_edges(idx, t, t + 1, stats);
}

EdgeSet deactivated_edges(const TgcsaIndex& idx, std::uint32_t t, std::uint32_t t_end, QueryStats* stats) {
    if (t < 1 || t >= t_end) throw std::invalid_argument("interval [t, t_end) must be non-empty and 1-based");
    switch (idx.model()) {
        case TimeModel::incremental:
            throw std::logic_error("deactivated_edges is undefined for incremental graphs");
        case TimeModel::point: {
            // A point contact at ts ends at ts + 1.
            if (t_end <= 2) return {};
            auto [lo, hi] = start_entries(idx, std::max<std::uint64_t>(1, t - 1), std::uint64_t{t_end} - 2);
            return edges_from_start_entries(idx, lo, hi, stats);
        }
        case TimeModel::interval:
            break;
    }
    if (t == std::uint64_t{t_end} - 1 && t <= idx.alphabet().lifetime()) {
        // Exact instant: one symbol range.
        SymbolRange range = symbol_range(idx, idx.alphabet().getmap(t, Section::end));
        if (range.empty()) return {};
        return edges_from_end_entries(idx, range.l - 1, range.r, stats);
    }
    const auto& am = idx.alphabet();
    std::uint64_t lo = std::max(section_begin(idx, Section::end), prefix_end(idx, am.getmap_floor(t - 1, Section::end)));
    std::uint64_t hi = prefix_end(idx, am.getmap_floor(std::uint64_t{t_end} - 1, Section::end));
    return edges_from_end_entries(idx, lo, std::max(lo, hi), stats);
}

Contact reconstruct_contact(const TgcsaIndex& idx, std::uint64_t i) {
    if (i < 1 || i > idx.length()) throw std::out_of_range("reconstruct_contact: position out of range");
    std::uint32_t terms[4] = {0, 0, 0, 0};
    std::uint64_t p = i;
    for (unsigned k = 0; k < idx.arity(); ++k) {
        auto s = static_cast<Section>((p - 1) / idx.contacts() + 1);
        terms[static_cast<unsigned>(s) - 1] = unmap_at(idx, p, s);
        p = idx.psi(p);
    }
    return Contact{terms[0], terms[1], terms[2], terms[3]};
}

}  // namespace tgcsa
