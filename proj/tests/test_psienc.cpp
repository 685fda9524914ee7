#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tgcsa/sacsa.hpp"
#include "tgcsa/vbyte.hpp"

using namespace tgcsa;

namespace {

using Vec = std::vector<std::uint64_t>;

const Vec kPsi{7, 9, 6, 8, 10, 11, 12, 15, 14, 13, 16, 18, 17, 19, 20, 3, 5, 1, 2, 4};
const char* kD = "10110110111010111100";

constexpr PsiCodecKind kAll[] = {PsiCodecKind::plain, PsiCodecKind::vbyte_rle, PsiCodecKind::vbyte_rle_select,
                                 PsiCodecKind::huff_rle_opt};

// Reference vbyte-rle stream, written from the token rules: inside each
// symbol group, maximal runs of +1 become <1, L>, gaps >= 2 are emitted as
// is. A decrease inside a group is not representable.
std::vector<std::uint8_t> reference_stream(const Vec& psi, const BitSequence& d) {
    const std::uint64_t len = psi.size();
    Vec w(len + 1);
    for (std::uint64_t i = 1; i <= len; ++i) w[i] = psi[i - 1];
    std::vector<std::uint8_t> out;
    std::uint64_t i = 1;
    while (i <= len) {
        std::uint64_t j = i;
        while (j < len && !d.access(j + 1)) ++j;
        std::uint64_t k = i;
        while (k < j) {
            if (w[k + 1] == w[k] + 1) {
                std::uint64_t run = 0;
                while (k < j && w[k + 1] == w[k] + 1) {
                    ++run;
                    ++k;
                }
                vbyte::encode(1, out);
                vbyte::encode(run, out);
            } else {
                REQUIRE(w[k + 1] > w[k] + 1);
                vbyte::encode(w[k + 1] - w[k], out);
                ++k;
            }
        }
        i = j + 1;
    }
    return out;
}

// Smallest token code in a vbyte-rle stream.
std::uint64_t min_token(const std::vector<std::uint8_t>& stream) {
    std::uint64_t lo = ~std::uint64_t{0};
    std::size_t off = 0;
    while (off < stream.size()) {
        auto [code, next] = vbyte::decode(stream, off);
        off = next;
        lo = std::min(lo, code);
        if (code == 1) off = vbyte::decode(stream, off).second;
    }
    return lo;
}

struct Built {
    Vec psi;
    BitSequence d;
    PsiShape shape;
};

Built build_parts(const ContactSet& cs) {
    auto am = AlphabetMap::build(cs);
    auto sid = build_sid(cs, am);
    auto ba = build_rotation_array(sid);
    auto psi = compute_psi(ba);
    if (!cs.empty()) cyclic_adjust_psi(psi, cs.size(), cs.arity);
    return {psi, build_d(ba, sid), PsiShape{cs.size(), cs.arity}};
}

void check_codec(const PsiCodec& c, const Built& b, std::mt19937_64& rng, int ranges) {
    const std::uint64_t len = b.psi.size();
    REQUIRE(c.size() == len);
    for (std::uint64_t i = 1; i <= len; ++i) REQUIRE(c.access(i, b.d) == b.psi[i - 1]);
    if (len == 0) return;
    Vec out(len);
    c.range(1, len, b.d, out);
    REQUIRE(out == b.psi);
    for (int k = 0; k < ranges; ++k) {
        std::uint64_t l = 1 + rng() % len;
        std::uint64_t r = l + rng() % (len - l + 1);
        Vec part(r - l + 1);
        c.range(l, r, b.d, part);
        REQUIRE(std::equal(part.begin(), part.end(), b.psi.begin() + static_cast<std::ptrdiff_t>(l - 1)));
    }
}

Vec decode_all(const PsiCodec& c, const BitSequence& d) {
    Vec out(c.size());
    if (!out.empty()) c.range(1, c.size(), d, out);
    return out;
}

}  // namespace

TEST_CASE("fixture stream") {
    auto d = BitSequence::from_string(kD);
    auto enc = VbyteRlePsi::build(kPsi, d, {5, 4}, 64, false);
    // Groups [1,2] [4,5] [7,8] [11,12] [13,14] have single gaps 2,2,3,2,2; the
    // end-time 8 group holds 1,2,4: a unit run then a gap of 2.
    std::vector<std::uint8_t> want{0x82, 0x82, 0x83, 0x82, 0x82, 0x81, 0x81, 0x82};
    CHECK(enc.stream() == want);
    CHECK(enc.stream() == reference_stream(kPsi, d));
    CHECK(enc.second_level_samples() == 0);
    CHECK(enc.second_level().size() == 0);
    for (std::uint64_t i = 1; i <= 20; ++i) CHECK(enc.access(i, d) == kPsi[i - 1]);
    CHECK(enc.access(20, d) == 4);
    Vec tail(5);
    enc.range(16, 20, d, tail);
    CHECK(tail == Vec{3, 5, 1, 2, 4});
    Vec head(2);
    enc.range(1, 2, d, head);
    CHECK(head == Vec{7, 9});
}

TEST_CASE("plain fixture") {
    auto d = BitSequence::from_string(kD);
    auto p = PlainPsi::build(kPsi);
    CHECK(p.size_bits() == 100);
    CHECK(p.access(7, d) == 12);
    CHECK_THROWS_AS((void)p.access(0, d), std::out_of_range);
    CHECK_THROWS_AS((void)p.access(21, d), std::out_of_range);
    Vec out(3);
    CHECK_THROWS_AS(p.range(19, 21, d, out), std::out_of_range);
}

TEST_CASE("every codec reproduces the fixture at every period") {
    auto b = build_parts(testing_support::g5());
    std::mt19937_64 rng(1);
    for (auto kind : kAll) {
        for (unsigned t : {1U, 2U, 3U, 8U, 64U}) {
            auto c = encode_psi(b.psi, b.d, b.shape, kind, t);
            CAPTURE(to_string(kind));
            CAPTURE(t);
            check_codec(*c, b, rng, 100);
            CHECK_THROWS_AS((void)c->access(21, b.d), std::out_of_range);
        }
    }
}

TEST_CASE("long unit runs are a single pair") {
    // Ten thousand contacts (1, v, 1, 2): every section is one group whose
    // values increase by exactly one.
    std::vector<Contact> cs;
    for (std::uint32_t v = 1; v <= 10000; ++v) cs.push_back({1, v, 1, 2});
    auto b = build_parts(make_contact_set(cs));
    std::vector<std::uint8_t> first_pair{0x81};
    vbyte::encode(9999, first_pair);
    for (unsigned t : {8U, 16U, 64U, 256U}) {
        auto enc = VbyteRlePsi::build(b.psi, b.d, b.shape, t, false);
        REQUIRE(enc.stream().size() >= 3);
        CHECK(std::equal(first_pair.begin(), first_pair.end(), enc.stream().begin()));
        // Source and start groups: one run each; targets are singletons; end group one run.
        CHECK(enc.stream().size() <= 12);
        std::mt19937_64 rng(t);
        check_codec(enc, b, rng, 200);
    }
}

TEST_CASE("a run of nine inside one group is one pair for any period") {
    // Source 1 has targets 1..10 plus 20, so its group is a run of 9 unit gaps then a jump.
    std::vector<Contact> cs;
    for (std::uint32_t v = 1; v <= 11; ++v) cs.push_back({1, v == 11 ? 20 : v, 3, 5});
    cs.push_back({2, 15, 1, 2});
    auto b = build_parts(make_contact_set(cs));
    std::vector<std::uint8_t> stream;
    for (unsigned t : {1U, 2U, 8U, 16U, 64U, 256U}) {
        auto enc = VbyteRlePsi::build(b.psi, b.d, b.shape, t, false);
        if (stream.empty()) stream = enc.stream();
        CHECK(enc.stream() == stream);
        CHECK(enc.stream() == reference_stream(b.psi, b.d));
        std::mt19937_64 rng(t);
        check_codec(enc, b, rng, 100);
    }
    CHECK(stream[0] == 0x81);
    CHECK(stream[1] == 0x89);
}

TEST_CASE("codec equivalence on random graphs") {
    std::mt19937_64 rng(2024);
    for (int g = 0; g < 25; ++g) {
        auto cs = testing_support::random_contacts(rng, 5 + rng() % 60, 2 + rng() % 60, 1 + rng() % 400, g % 2 == 0);
        for (unsigned arity : {4U, 3U}) {
            auto set = arity == 4 ? cs : to_arity3(cs);
            auto b = build_parts(set);
            for (auto kind : kAll) {
                for (unsigned t : {8U, 16U, 64U, 256U}) {
                    auto c = encode_psi(b.psi, b.d, b.shape, kind, t);
                    check_codec(*c, b, rng, 100);
                }
            }
            auto v = VbyteRlePsi::build(b.psi, b.d, b.shape, 16, false);
            auto vs = VbyteRlePsi::build(b.psi, b.d, b.shape, 16, true);
            CHECK(v.stream() == reference_stream(b.psi, b.d));
            CHECK(vs.stream() == v.stream());
            CHECK(vs.size_bits() <= v.size_bits());
            CHECK(vs.second_level() == v.second_level());
        }
    }
}

TEST_CASE("repeated contacts never need a reset token") {
    std::mt19937_64 rng(8);
    for (int g = 0; g < 20; ++g) {
        auto cs = testing_support::random_contacts(rng, 6, 6, 300, true);
        auto b = build_parts(cs);
        auto v = VbyteRlePsi::build(b.psi, b.d, b.shape, 8, false);
        if (!v.stream().empty()) CHECK(min_token(v.stream()) >= 1);
    }
    std::vector<Contact> same(9, Contact{3, 3, 2, 4});
    auto b = build_parts(make_contact_set(same));
    auto v = VbyteRlePsi::build(b.psi, b.d, b.shape, 2, false);
    // Four groups, each one run of eight unit gaps.
    CHECK(v.stream() == std::vector<std::uint8_t>{0x81, 0x88, 0x81, 0x88, 0x81, 0x88, 0x81, 0x88});

    auto d = BitSequence::from_string(kD);
    Vec swapped = kPsi;
    std::swap(swapped[17], swapped[18]);
    CHECK_THROWS_AS((void)VbyteRlePsi::build(swapped, d, {5, 4}, 8, false), std::invalid_argument);
}

TEST_CASE("second-level samples") {
    std::vector<Contact> cs;
    for (std::uint32_t v = 1; v <= 50; ++v) cs.push_back({1, v, 1 + v % 7, 20});
    auto b = build_parts(make_contact_set(cs));
    auto enc = VbyteRlePsi::build(b.psi, b.d, b.shape, 4, false);
    CHECK(enc.second_level_samples() > 0);
    CHECK(enc.second_level().count_ones() == enc.second_level_samples());
    // No sample sits on a group start, which is already a first-level sample.
    for (std::uint64_t k = 1; k <= enc.second_level().count_ones(); ++k) {
        CHECK_FALSE(b.d.access(enc.second_level().select1(k)));
    }
    std::mt19937_64 rng(4);
    check_codec(enc, b, rng, 300);
}

TEST_CASE("huffman escapes and long codes") {
    // Wide gaps force escape classes; many distinct gaps stretch the code.
    std::vector<Contact> cs;
    for (std::uint32_t v = 1; v <= 3000; ++v) cs.push_back({1 + v % 3, v * 17 % 40000 + 1, 1 + v % 50, 60});
    auto b = build_parts(make_contact_set(cs, 4, TimeModel::interval, 40001, 60));
    for (unsigned t : {1U, 8U, 256U}) {
        auto h = HuffRlePsi::build(b.psi, b.shape, t);
        std::mt19937_64 rng(t);
        check_codec(h, b, rng, 200);
    }
}

TEST_CASE("serialization is canonical") {
    std::mt19937_64 rng(13);
    auto cs = testing_support::random_contacts(rng, 40, 40, 300, true);
    auto b = build_parts(cs);
    for (auto kind : kAll) {
        for (unsigned t : {8U, 64U}) {
            auto c = encode_psi(b.psi, b.d, b.shape, kind, t);
            ByteWriter w1;
            c->serialize(w1);
            ByteReader r(w1.bytes());
            auto back = deserialize_psi(r, kind, b.shape, t);
            CHECK(r.at_end());
            CHECK(decode_all(*back, b.d) == b.psi);
            CHECK(back->size_bits() == c->size_bits());
            ByteWriter w2;
            back->serialize(w2);
            CHECK(w2.bytes() == w1.bytes());

            auto bytes = w1.bytes();
            if (bytes.size() > 16) {
                bytes.resize(bytes.size() / 2);
                ByteReader cut(bytes);
                CHECK_THROWS((void)deserialize_psi(cut, kind, b.shape, t));
            }
        }
    }
}

TEST_CASE("codec names") {
    for (auto kind : kAll) CHECK(psi_codec_from_string(to_string(kind)) == kind);
    CHECK_THROWS_AS((void)psi_codec_from_string("gamma"), std::invalid_argument);
    auto b = build_parts(testing_support::g5());
    CHECK_THROWS_AS((void)encode_psi(b.psi, b.d, b.shape, PsiCodecKind::vbyte_rle, 0), std::invalid_argument);
}
