#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tgcsa/query.hpp"

using namespace tgcsa;

namespace {

using Sem = TimeSemantics;

constexpr std::uint64_t kForever = std::numeric_limits<std::uint64_t>::max();

// End instant under the set's time model.
std::uint64_t end_of(const ContactSet& cs, const Contact& c) {
    if (cs.arity == 4) return c.te;
    return cs.model == TimeModel::point ? std::uint64_t{c.ts} + 1 : kForever;
}

bool matches(const ContactSet& cs, const Contact& c, const Sem& s) {
    std::uint64_t ts = c.ts;
    std::uint64_t te = end_of(cs, c);
    switch (s.kind) {
        case Sem::Kind::instant: return ts <= s.t && s.t < te;
        case Sem::Kind::strong: return ts <= s.t && te >= s.t_end;
        case Sem::Kind::weak: return ts < s.t_end && te > s.t;
    }
    return false;
}

VertexSet brute_direct(const ContactSet& cs, std::uint32_t u, const Sem& s) {
    std::set<std::uint32_t> out;
    for (const auto& c : cs.contacts)
        if (c.u == u && matches(cs, c, s)) out.insert(c.v);
    return {out.begin(), out.end()};
}

VertexSet brute_reverse(const ContactSet& cs, std::uint32_t v, const Sem& s) {
    std::set<std::uint32_t> out;
    for (const auto& c : cs.contacts)
        if (c.v == v && matches(cs, c, s)) out.insert(c.u);
    return {out.begin(), out.end()};
}

EdgeSet brute_snapshot(const ContactSet& cs, const Sem& s) {
    std::set<Edge> out;
    for (const auto& c : cs.contacts)
        if (matches(cs, c, s)) out.insert({c.u, c.v});
    return {out.begin(), out.end()};
}

EdgeSet brute_started(const ContactSet& cs, std::uint64_t t, std::uint64_t t_end) {
    std::set<Edge> out;
    for (const auto& c : cs.contacts)
        if (c.ts >= t && c.ts < t_end) out.insert({c.u, c.v});
    return {out.begin(), out.end()};
}

EdgeSet brute_ended(const ContactSet& cs, std::uint64_t t, std::uint64_t t_end) {
    std::set<Edge> out;
    for (const auto& c : cs.contacts) {
        auto te = end_of(cs, c);
        if (te >= t && te < t_end) out.insert({c.u, c.v});
    }
    return {out.begin(), out.end()};
}

Sem random_sem(std::mt19937_64& rng, std::uint32_t tau) {
    std::uint32_t t = 1 + static_cast<std::uint32_t>(rng() % tau);
    std::uint32_t t_end = t + 1 + static_cast<std::uint32_t>(rng() % (tau - t + 1));
    switch (rng() % 3) {
        case 0: return Sem::at(t);
        case 1: return Sem::strong(t, t_end);
        default: return Sem::weak(t, t_end);
    }
}

void compare_with_brute_force(const ContactSet& cs, const TgcsaIndex& idx, std::mt19937_64& rng) {
    const std::uint32_t tau = cs.lifetime;
    for (int k = 0; k < 40; ++k) {
        Sem s = random_sem(rng, tau);
        CAPTURE(static_cast<int>(s.kind));
        CAPTURE(s.t);
        CAPTURE(s.t_end);
        std::uint32_t x = 1 + static_cast<std::uint32_t>(rng() % cs.vertices);
        CHECK(direct_neighbors(idx, x, s) == brute_direct(cs, x, s));
        CHECK(reverse_neighbors(idx, x, s) == brute_reverse(cs, x, s));
        CHECK(snapshot(idx, s) == brute_snapshot(cs, s));
        std::uint32_t y = 1 + static_cast<std::uint32_t>(rng() % cs.vertices);
        auto nb = brute_direct(cs, x, s);
        CHECK(active_edge(idx, x, y, s) == std::binary_search(nb.begin(), nb.end(), y));
    }
    for (std::uint32_t t = 1; t <= tau; ++t) {
        CHECK(activated_edges(idx, t) == brute_started(cs, t, t + 1));
        std::uint32_t t_end = t + 1 + static_cast<std::uint32_t>(rng() % (tau - t + 1));
        CHECK(activated_edges(idx, t, t_end) == brute_started(cs, t, t_end));
        if (cs.model != TimeModel::incremental) {
            CHECK(deactivated_edges(idx, t) == brute_ended(cs, t, t + 1));
            CHECK(deactivated_edges(idx, t, t_end) == brute_ended(cs, t, t_end));
        }
    }
}

}  // namespace

TEST_CASE("ranges on the fixture") {
    auto idx = build_index(testing_support::g5());
    CHECK(symbol_range(idx, 1) == SymbolRange{1, 2});
    CHECK(symbol_range(idx, 13) == SymbolRange{18, 20});
    CHECK(symbol_range(idx, 9) == SymbolRange{13, 14});
    CHECK(symbol_range(idx, 0).empty());

    std::vector<std::uint64_t> e45{3, 7}, e14{1, 6}, e23{2, 5};
    CHECK(pattern_range(idx, e45) == SymbolRange{5, 5});
    CHECK(pattern_range(idx, e14) == SymbolRange{2, 2});
    CHECK(pattern_range(idx, e23).empty());
    std::vector<std::uint64_t> full{1, 6, 9, 13};
    CHECK(pattern_range(idx, full) == SymbolRange{2, 2});
    std::vector<std::uint64_t> skip{1, 9};
    CHECK_THROWS_AS((void)pattern_range(idx, skip), std::invalid_argument);

    CHECK(time_bounds(idx, 5) == std::pair<std::uint64_t, std::uint64_t>{14, 15});
    CHECK(time_bounds(idx, 6) == std::pair<std::uint64_t, std::uint64_t>{14, 16});
    CHECK(time_bounds(idx, 7) == std::pair<std::uint64_t, std::uint64_t>{15, 17});
    CHECK_THROWS_AS((void)time_bounds(idx, 0), std::out_of_range);
    CHECK_THROWS_AS((void)time_bounds(idx, 9), std::out_of_range);
}

TEST_CASE("neighbors on the fixture") {
    auto idx = build_index(testing_support::g5());
    CHECK(direct_neighbors(idx, 1, Sem::at(5)) == VertexSet{3, 4});
    CHECK(direct_neighbors(idx, 1, Sem::at(8)).empty());
    CHECK(direct_neighbors(idx, 1, Sem::strong(5, 8)) == VertexSet{3, 4});
    CHECK(direct_neighbors(idx, 1, Sem::weak(2, 5)) == VertexSet{3});
    CHECK(direct_neighbors(idx, 3, Sem::at(2)).empty());

    CHECK(reverse_neighbors(idx, 3, Sem::at(7)) == VertexSet{1, 4});
    CHECK(reverse_neighbors(idx, 1, Sem::at(3)) == VertexSet{2});
    CHECK(reverse_neighbors(idx, 2, Sem::at(3)).empty());

    CHECK(active_edge(idx, 4, 5, Sem::at(6)));
    CHECK_FALSE(active_edge(idx, 4, 5, Sem::at(7)));
    CHECK_FALSE(active_edge(idx, 2, 3, Sem::at(1)));
}

TEST_CASE("snapshots and activity changes on the fixture") {
    auto idx = build_index(testing_support::g5());
    CHECK(snapshot(idx, Sem::at(6)) == EdgeSet{{1, 3}, {1, 4}, {4, 5}});
    CHECK(snapshot(idx, Sem::at(1)) == EdgeSet{{1, 3}, {2, 1}});
    CHECK(snapshot_contacts(idx, Sem::at(6)).size() == 3);

    auto early = build_index(make_contact_set({{1, 2, 3, 5}, {2, 1, 4, 6}}));
    CHECK(snapshot(early, Sem::at(1)).empty());
    CHECK(snapshot(early, Sem::at(2)).empty());

    CHECK(deactivated_edges(idx, 8) == EdgeSet{{1, 3}, {1, 4}, {4, 3}});
    CHECK(activated_edges(idx, 5) == EdgeSet{{1, 4}, {4, 5}});
    CHECK(activated_edges(idx, 2).empty());
    CHECK(activated_edges(idx, 1, 6) == EdgeSet{{1, 3}, {1, 4}, {2, 1}, {4, 5}});
    CHECK(deactivated_edges(idx, 6, 8) == EdgeSet{{2, 1}, {4, 5}});
}

TEST_CASE("contact reconstruction follows the cycle") {
    auto cs = testing_support::g5();
    auto idx = build_index(cs);
    CHECK(reconstruct_contact(idx, 10) == Contact{4, 5, 5, 7});
    CHECK(reconstruct_contact(idx, 1) == Contact{1, 3, 1, 8});
    for (std::uint64_t i = 1; i <= idx.length(); ++i) {
        auto c = reconstruct_contact(idx, i);
        std::uint64_t j = i;
        for (int k = 0; k < 4; ++k) {
            j = idx.psi(j);
            CHECK(reconstruct_contact(idx, j) == c);
        }
        CHECK(j == i);
    }
    std::vector<Contact> firsts;
    for (std::uint64_t q = 1; q <= cs.size(); ++q) firsts.push_back(reconstruct_contact(idx, q));
    CHECK(firsts == cs.contacts);
    CHECK_THROWS_AS((void)reconstruct_contact(idx, 21), std::out_of_range);
}

TEST_CASE("strong answers shrink and weak answers grow with the window") {
    std::mt19937_64 rng(99);
    auto cs = testing_support::random_contacts(rng, 20, 40, 300, true);
    auto idx = build_index(cs, {PsiCodecKind::vbyte_rle, 16});
    for (std::uint32_t t = 1; t < cs.lifetime; ++t) {
        for (std::uint32_t u = 1; u <= cs.vertices; u += 3) {
            VertexSet prev_strong = direct_neighbors(idx, u, Sem::at(t));
            VertexSet prev_weak = prev_strong;
            for (std::uint32_t e = t + 2; e <= cs.lifetime + 1; e += 5) {
                auto s = direct_neighbors(idx, u, Sem::strong(t, e));
                auto w = direct_neighbors(idx, u, Sem::weak(t, e));
                CHECK(std::includes(prev_strong.begin(), prev_strong.end(), s.begin(), s.end()));
                CHECK(std::includes(w.begin(), w.end(), prev_weak.begin(), prev_weak.end()));
                prev_strong = s;
                prev_weak = w;
            }
        }
    }
}

TEST_CASE("strong snapshots lie inside both end snapshots") {
    std::mt19937_64 rng(11);
    auto cs = testing_support::random_contacts(rng, 25, 30, 400, true);
    auto idx = build_index(cs, {PsiCodecKind::huff_rle_opt, 8});
    for (std::uint32_t t = 1; t < cs.lifetime; ++t) {
        for (std::uint32_t e = t + 1; e <= cs.lifetime; e += 4) {
            auto s = snapshot(idx, Sem::strong(t, e));
            auto a = snapshot(idx, Sem::at(t));
            auto b = snapshot(idx, Sem::at(e - 1));
            CHECK(std::includes(a.begin(), a.end(), s.begin(), s.end()));
            CHECK(std::includes(b.begin(), b.end(), s.begin(), s.end()));
            auto w = direct_neighbors(idx, t % cs.vertices + 1, Sem::weak(t, e));
            auto st = direct_neighbors(idx, t % cs.vertices + 1, Sem::strong(t, e));
            CHECK(std::includes(w.begin(), w.end(), st.begin(), st.end()));
        }
    }
}

TEST_CASE("Ψ accesses per candidate are bounded by the arity") {
    std::mt19937_64 rng(5);
    for (auto kind : {PsiCodecKind::plain, PsiCodecKind::vbyte_rle_select, PsiCodecKind::huff_rle_opt}) {
        auto cs = testing_support::random_contacts(rng, 30, 50, 500, true);
        auto idx = build_index(cs, {kind, 32});
        for (std::uint32_t t = 1; t <= cs.lifetime; t += 3) {
            QueryStats st;
            (void)snapshot(idx, Sem::at(t), &st);
            CHECK(st.loop_accesses() <= 4 * std::max<std::uint64_t>(st.candidates, 1));
            for (std::uint32_t u = 1; u <= cs.vertices; u += 7) {
                QueryStats sd;
                (void)direct_neighbors(idx, u, Sem::weak(t, t + 4), &sd);
                CHECK(sd.loop_accesses() <= 4 * std::max<std::uint64_t>(sd.candidates, 1));
                QueryStats sr;
                (void)reverse_neighbors(idx, u, Sem::at(t), &sr);
                CHECK(sr.loop_accesses() <= 4 * std::max<std::uint64_t>(sr.candidates, 1));
            }
        }
    }
}

TEST_CASE("index answers equal brute force on random interval graphs") {
    std::mt19937_64 rng(314);
    for (int g = 0; g < 12; ++g) {
        auto cs = testing_support::random_contacts(rng, 3 + rng() % 30, 2 + rng() % 40, 1 + rng() % 300, g % 2 == 0);
        for (auto kind : {PsiCodecKind::plain, PsiCodecKind::vbyte_rle, PsiCodecKind::vbyte_rle_select,
                          PsiCodecKind::huff_rle_opt}) {
            auto idx = build_index(cs, {kind, 8});
            compare_with_brute_force(cs, idx, rng);
        }
    }
}

TEST_CASE("arity-3 incremental and point graphs") {
    std::mt19937_64 rng(2718);
    for (int g = 0; g < 12; ++g) {
        auto base = testing_support::random_contacts(rng, 3 + rng() % 25, 3 + rng() % 30, 1 + rng() % 250, true);
        for (auto model : {TimeModel::incremental, TimeModel::point}) {
            auto cs = to_arity3(base, model);
            for (auto kind : {PsiCodecKind::plain, PsiCodecKind::vbyte_rle}) {
                auto idx = build_index(cs, {kind, 8});
                CHECK(verify_core(idx).empty());
                compare_with_brute_force(cs, idx, rng);
            }
        }
        auto inc = build_index(to_arity3(base, TimeModel::incremental));
        CHECK_THROWS_AS((void)deactivated_edges(inc, 2), std::logic_error);
    }
}

TEST_CASE("empty index answers nothing") {
    auto idx = build_index(make_contact_set({}, 4, TimeModel::interval, 4, 6));
    CHECK(direct_neighbors(idx, 1, Sem::at(2)).empty());
    CHECK(snapshot(idx, Sem::weak(1, 6)).empty());
    CHECK(activated_edges(idx, 3).empty());
    CHECK(deactivated_edges(idx, 1, 7).empty());
}
