#include <random>

#include "doctest.h"
#include "tgcsa/bitseq.hpp"
#include "tgcsa/int_vector.hpp"
#include "tgcsa/vbyte.hpp"

using tgcsa::BitSequence;

namespace {

const char* kG5D = "10110110111010111100";

BitSequence g5_b() {
    std::vector<std::uint64_t> ones{1, 2, 4, 6, 8, 9, 10, 11, 15, 17, 24, 25, 26};
    return BitSequence::from_positions(26, ones);
}

void check_against_scan(const std::vector<bool>& bits) {
    auto bs = BitSequence::from_bits(bits);
    REQUIRE(bs.size() == bits.size());
    std::uint64_t ones = 0;
    std::vector<std::uint64_t> where;
    CHECK(bs.rank1(0) == 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            ++ones;
            where.push_back(i + 1);
        }
        REQUIRE(bs.access(i + 1) == bits[i]);
        REQUIRE(bs.rank1(i + 1) == ones);
    }
    REQUIRE(bs.count_ones() == ones);
    for (std::size_t k = 0; k < where.size(); ++k) REQUIRE(bs.select1(k + 1) == where[k]);
    CHECK_THROWS_AS((void)bs.select1(ones + 1), std::out_of_range);
}

}  // namespace

TEST_CASE("empty and tiny sequences") {
    auto e = BitSequence::from_bits({});
    CHECK(e.size() == 0);
    CHECK(e.rank1(0) == 0);
    CHECK(e.count_ones() == 0);
    CHECK_THROWS_AS((void)e.select1(1), std::out_of_range);
    CHECK_THROWS_AS((void)e.access(1), std::out_of_range);

    auto b = BitSequence::from_bits({true, false, true, true, false});
    CHECK(b.rank1(5) == 3);
    CHECK(b.select1(3) == 4);
    CHECK(b.to_string() == "10110");
}

TEST_CASE("fixture bitmaps") {
    auto d = BitSequence::from_string(kG5D);
    CHECK(d.count_ones() == 13);
    CHECK(d.rank1(7) == 5);
    CHECK(d.select1(5) == 7);
    CHECK(d.access(1));

    auto b = g5_b();
    CHECK(b.rank1(8) == 5);
    CHECK(b.select1(1) == 1);
    CHECK(b.select1(13) == 26);
    CHECK_FALSE(b.access(3));
    CHECK(b.access(26));
}

TEST_CASE("out of range arguments") {
    auto d = BitSequence::from_string(kG5D);
    CHECK_THROWS_AS((void)d.rank1(21), std::out_of_range);
    CHECK_THROWS_AS((void)d.access(0), std::out_of_range);
    CHECK_THROWS_AS((void)d.access(21), std::out_of_range);
    CHECK_THROWS_AS((void)d.select1(0), std::out_of_range);
    CHECK_THROWS_AS((void)d.select1(14), std::out_of_range);
    CHECK_THROWS((void)BitSequence::from_string("10x1"));
}

TEST_CASE("rank and select agree with a linear scan") {
    std::mt19937_64 rng(11);
    for (std::size_t len : {1, 63, 64, 65, 511, 512, 513, 1023, 4096, 5000, 70001}) {
        for (double density : {0.0, 0.01, 0.5, 0.97, 1.0}) {
            std::bernoulli_distribution coin(density);
            std::vector<bool> bits(len);
            for (std::size_t i = 0; i < len; ++i) bits[i] = coin(rng);
            check_against_scan(bits);
        }
    }
}

TEST_CASE("round-trip identities on a long sequence") {
    std::mt19937_64 rng(5);
    std::bernoulli_distribution coin(0.3);
    std::vector<bool> bits(1'000'000);
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = coin(rng);
    auto bs = BitSequence::from_bits(bits);
    std::uint64_t prev = 0;
    for (std::uint64_t i = 1; i <= bs.size(); ++i) {
        std::uint64_t r = bs.rank1(i);
        REQUIRE(r - prev == (bs.access(i) ? 1U : 0U));
        if (r > 0) REQUIRE(bs.select1(r) <= i);
        prev = r;
    }
    for (std::uint64_t k = 1; k <= bs.count_ones(); k += 7) REQUIRE(bs.rank1(bs.select1(k)) == k);
    CHECK(bs.rank1(bs.size()) == bs.count_ones());
}

TEST_CASE("from_positions tolerates order and duplicates") {
    std::vector<std::uint64_t> ones{26, 1, 9, 1, 9};
    auto b = BitSequence::from_positions(26, ones);
    CHECK(b.count_ones() == 3);
    CHECK(b.select1(2) == 9);
    std::vector<std::uint64_t> bad{27};
    CHECK_THROWS((void)BitSequence::from_positions(26, bad));
}

TEST_CASE("serialization") {
    for (const char* s : {"", "1", kG5D}) {
        auto b = BitSequence::from_string(s);
        tgcsa::ByteWriter w;
        b.serialize(w);
        CHECK(w.size() == 8 + 8 * ((b.size() + 63) / 64));
        tgcsa::ByteReader r(w.bytes());
        auto back = BitSequence::deserialize(r);
        CHECK(r.at_end());
        CHECK(back == b);
        CHECK(back.rank1(back.size()) == b.count_ones());
    }
    // Bits beyond the length must be zero.
    tgcsa::ByteWriter w;
    w.put_u64(3);
    w.put_u64(0xFF);
    tgcsa::ByteReader r(w.bytes());
    CHECK_THROWS_AS((void)BitSequence::deserialize(r), tgcsa::FormatError);
    tgcsa::ByteWriter shortw;
    shortw.put_u64(100);
    tgcsa::ByteReader sr(shortw.bytes());
    CHECK_THROWS_AS((void)BitSequence::deserialize(sr), tgcsa::FormatError);
}

TEST_CASE("packed integers") {
    CHECK(tgcsa::bits_for(0) == 0);
    CHECK(tgcsa::bits_for(1) == 1);
    CHECK(tgcsa::bits_for(255) == 8);
    CHECK(tgcsa::bits_for(256) == 9);
    CHECK(tgcsa::ceil_log2(1) == 0);
    CHECK(tgcsa::ceil_log2(20) == 5);
    CHECK(tgcsa::ceil_log2(32) == 5);
    CHECK(tgcsa::ceil_log2(33) == 6);

    std::mt19937_64 rng(3);
    for (unsigned width : {0U, 1U, 7U, 13U, 31U, 63U, 64U}) {
        std::vector<std::uint64_t> vals(1000);
        for (auto& v : vals) v = width == 64 ? rng() : (width == 0 ? 0 : rng() & ((std::uint64_t{1} << width) - 1));
        tgcsa::IntVector iv(vals.size(), width);
        for (std::size_t i = 0; i < vals.size(); ++i) iv.set(i, vals[i]);
        for (std::size_t i = 0; i < vals.size(); ++i) REQUIRE(iv[i] == vals[i]);
        CHECK(iv.size_bits() == vals.size() * width);
        tgcsa::ByteWriter w;
        iv.serialize(w);
        tgcsa::ByteReader r(w.bytes());
        CHECK(tgcsa::IntVector::deserialize(r) == iv);
    }
    std::vector<std::uint64_t> v{3, 0, 17};
    auto iv = tgcsa::IntVector::from_values(v);
    CHECK(iv.width() == 5);
    CHECK(iv[2] == 17);
}

TEST_CASE("vbyte layout") {
    using tgcsa::vbyte::decode;
    using tgcsa::vbyte::encode;
    CHECK(encode(135) == std::vector<std::uint8_t>{0x07, 0x81});
    CHECK(encode(5) == std::vector<std::uint8_t>{0x85});
    CHECK(encode(0) == std::vector<std::uint8_t>{0x80});
    std::vector<std::uint8_t> zero{0x80};
    CHECK(decode(zero, 0) == std::pair<std::uint64_t, std::size_t>{0, 1});

    std::mt19937_64 rng(9);
    std::vector<std::uint64_t> vals{0, 1, 127, 128, 16383, 16384, ~std::uint64_t{0}};
    for (int i = 0; i < 1000; ++i) vals.push_back(rng() >> (rng() % 64));
    std::vector<std::uint8_t> buf;
    for (auto v : vals) tgcsa::vbyte::encode(v, buf);
    std::size_t off = 0;
    const std::uint8_t* p = buf.data();
    for (auto v : vals) {
        auto [got, next] = decode(buf, off);
        REQUIRE(got == v);
        REQUIRE(next - off == tgcsa::vbyte::encoded_size(v));
        REQUIRE(tgcsa::vbyte::decode_unchecked(p) == v);
        off = next;
    }
    CHECK(off == buf.size());
    std::vector<std::uint8_t> truncated{0x07};
    CHECK_THROWS_AS((void)decode(truncated, 0), std::out_of_range);
}
