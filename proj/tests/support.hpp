#pragma once
// Fixtures and naive reference computations shared by the unit tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tgcsa/corpus.hpp"

namespace testing_support {

using tgcsa::Contact;
using tgcsa::ContactSet;

// Five contacts over ν = 5, τ = 8.
inline ContactSet g5() {
    return tgcsa::make_contact_set({{1, 3, 1, 8}, {1, 4, 5, 8}, {2, 1, 1, 6}, {4, 3, 7, 8}, {4, 5, 5, 7}});
}

inline const char* g5_text() { return "1 3 1 8\n1 4 5 8\n2 1 1 6\n4 3 7 8\n4 5 5 7\n"; }

// Sorts all suffixes symbol by symbol; a suffix that runs out first is the
// larger one. Returns A with 1-based values.
inline std::vector<std::uint64_t> naive_rotation_order(const std::vector<std::uint64_t>& s) {
    const std::size_t n = s.size();
    std::vector<std::uint64_t> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = i;
    std::sort(a.begin(), a.end(), [&](std::uint64_t x, std::uint64_t y) {
        std::vector<std::uint64_t> sx(s.begin() + x, s.end()), sy(s.begin() + y, s.end());
        sx.push_back(~std::uint64_t{0});
        sy.push_back(~std::uint64_t{0});
        return sx < sy;
    });
    for (auto& v : a) ++v;
    return a;
}

// Ψ straight from its definition: successor rotation, except that the last
// term of a contact points back to the first term of the same contact.
inline std::vector<std::uint64_t> naive_adjusted_psi(const std::vector<std::uint64_t>& a, unsigned arity) {
    const std::size_t len = a.size();
    std::vector<std::uint64_t> inv(len + 1);
    for (std::size_t q = 0; q < len; ++q) inv[a[q]] = q + 1;
    std::vector<std::uint64_t> psi(len);
    for (std::size_t q = 0; q < len; ++q) {
        std::uint64_t p = a[q];  // 1-based text position
        std::uint64_t term = (p - 1) % arity;
        std::uint64_t next = term + 1 == arity ? p - (arity - 1) : p + 1;
        psi[q] = inv[next];
    }
    return psi;
}

// Random arity-4 contacts; with `overlaps` some edges get intersecting or
// duplicated intervals.
inline ContactSet random_contacts(std::mt19937_64& rng, std::uint32_t nu, std::uint32_t tau, std::size_t n,
                                  bool overlaps) {
    auto pick = [&](std::uint32_t lo, std::uint32_t hi) {
        return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
    };
    std::vector<Contact> out;
    if (overlaps) {
        while (out.size() < n) {
            std::uint32_t ts = pick(1, tau - 1);
            Contact c{pick(1, nu), pick(1, nu), ts, pick(ts + 1, tau)};
            out.push_back(c);
            if (out.size() < n && pick(0, 9) == 0) out.push_back(c);
            if (out.size() < n && pick(0, 9) == 0) {
                std::uint32_t ts2 = pick(c.ts, c.te - 1);
                out.push_back({c.u, c.v, ts2, pick(ts2 + 1, tau)});
            }
        }
        out.resize(n);
    } else {
        // Per edge: disjoint (possibly touching) intervals from sorted instants.
        // Stops early once every vertex pair carries contacts.
        std::size_t edges = 0;
        while (out.size() < n && edges < std::size_t{nu} * nu) {
            std::uint32_t u = pick(1, nu);
            std::uint32_t v = pick(1, nu);
            bool used = std::any_of(out.begin(), out.end(), [&](const Contact& c) { return c.u == u && c.v == v; });
            if (used) continue;
            ++edges;
            std::uint32_t k = std::min<std::uint32_t>(pick(1, 4), tau / 2);
            std::vector<std::uint32_t> pts;
            while (pts.size() < 2 * k) {
                std::uint32_t t = pick(1, tau);
                if (std::find(pts.begin(), pts.end(), t) == pts.end()) pts.push_back(t);
            }
            std::sort(pts.begin(), pts.end());
            for (std::size_t j = 0; j < pts.size() && out.size() < n; j += 2) {
                std::uint32_t ts = pts[j];
                if (j > 0 && pick(0, 3) == 0) ts = pts[j - 1];  // touch the previous interval
                out.push_back({u, v, ts, pts[j + 1]});
            }
        }
    }
    return tgcsa::make_contact_set(std::move(out), 4, tgcsa::TimeModel::interval, nu, tau);
}

}  // namespace testing_support
