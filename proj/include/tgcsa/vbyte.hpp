#pragma once
// Byte-aligned variable-length integers.
//
// Layout: 7-bit groups, least significant group first; the high bit is set on
// the final byte only. 135 -> {0x07, 0x81}, 5 -> {0x85}, 0 -> {0x80}.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tgcsa::vbyte {

inline void encode(std::uint64_t g, std::vector<std::uint8_t>& out) {
    while (g >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(g & 0x7F));
        g >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(g | 0x80));
}

inline std::vector<std::uint8_t> encode(std::uint64_t g) {
    std::vector<std::uint8_t> out;
    encode(g, out);
    return out;
}

[[nodiscard]] inline unsigned encoded_size(std::uint64_t g) {
    unsigned n = 1;
    while (g >= 0x80) {
        g >>= 7;
        ++n;
    }
    return n;
}

// Unchecked decode for streams produced by encode(); advances `p`.
inline std::uint64_t decode_unchecked(const std::uint8_t*& p) {
    std::uint64_t v = 0;
    unsigned shift = 0;
    std::uint8_t b = *p++;
    while (!(b & 0x80)) {
        v |= std::uint64_t{b} << shift;
        shift += 7;
        b = *p++;
    }
    return v | (std::uint64_t{b & 0x7FU} << shift);
}

// Returns the value and the offset just past its codeword.
inline std::pair<std::uint64_t, std::size_t> decode(std::span<const std::uint8_t> bytes, std::size_t offset) {
    std::uint64_t v = 0;
    unsigned shift = 0;
    while (true) {
        if (offset >= bytes.size()) throw std::out_of_range("vbyte: truncated stream");
        if (shift > 63) throw std::out_of_range("vbyte: codeword longer than 64 bits");
        std::uint8_t b = bytes[offset++];
        v |= std::uint64_t{b & 0x7FU} << shift;
        if (b & 0x80) return {v, offset};
        shift += 7;
    }
}

}  // namespace tgcsa::vbyte
