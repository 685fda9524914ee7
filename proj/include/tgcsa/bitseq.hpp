#pragma once
// Static bit sequence with rank/select support.
//
// Positions are 1-based throughout the library: access(1) is the first bit,
// rank1(i) counts ones in [1, i], select1(k) is the position of the k-th one.
// Layout: plain 64-bit words, a superblock directory every 512 bits holding
// absolute counts, and a 16-bit relative count per word. select1 binary-searches
// the superblocks and scans at most eight words.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgcsa/byte_io.hpp"

namespace tgcsa {

class BitSequence {
public:
    BitSequence() { build_directory(); }

    static BitSequence from_bits(const std::vector<bool>& bits);
    // Accepts '0'/'1' characters; whitespace is ignored.
    static BitSequence from_string(std::string_view bits);
    // `ones` are 1-based positions, any order; duplicates tolerated.
    static BitSequence from_positions(std::uint64_t length, std::span<const std::uint64_t> ones);

    [[nodiscard]] std::uint64_t size() const { return length_; }
    [[nodiscard]] std::uint64_t count_ones() const { return ones_; }

    [[nodiscard]] bool access(std::uint64_t pos) const;
    [[nodiscard]] std::uint64_t rank1(std::uint64_t pos) const;
    [[nodiscard]] std::uint64_t select1(std::uint64_t k) const;

    // Unchecked variants for hot loops; caller guarantees ranges.
    [[nodiscard]] bool get(std::uint64_t pos) const {
        std::uint64_t b = pos - 1;
        return (words_[b >> 6] >> (b & 63)) & 1U;
    }
    [[nodiscard]] std::uint64_t rank1_unchecked(std::uint64_t pos) const {
        std::uint64_t w = pos >> 6;
        std::uint64_t r = super_[w >> 3] + blocks_[w];
        if (unsigned rem = pos & 63; rem != 0) {
            r += static_cast<std::uint64_t>(__builtin_popcountll(words_[w] & ((std::uint64_t{1} << rem) - 1)));
        }
        return r;
    }

    // Storage including directories.
    [[nodiscard]] std::uint64_t size_bits() const;
    [[nodiscard]] std::string to_string() const;

    void serialize(ByteWriter& out) const;
    static BitSequence deserialize(ByteReader& in);

    friend bool operator==(const BitSequence& a, const BitSequence& b) {
        return a.length_ == b.length_ && a.words_ == b.words_;
    }

private:
    BitSequence(std::uint64_t length, std::vector<std::uint64_t> words);
    void build_directory();

    static constexpr std::uint64_t kWordsPerSuper = 8;  // 512-bit superblocks

    std::uint64_t length_ = 0;
    std::uint64_t ones_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> super_;
    std::vector<std::uint16_t> blocks_;
};

}  // namespace tgcsa
