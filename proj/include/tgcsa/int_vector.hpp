#pragma once
// Fixed-width packed integer array.

#include <cstdint>
#include <span>
#include <vector>

#include "tgcsa/byte_io.hpp"

namespace tgcsa {

// Bits needed to store any value in [0, max_value].
inline unsigned bits_for(std::uint64_t max_value) {
    return max_value == 0 ? 0U : 64U - static_cast<unsigned>(__builtin_clzll(max_value));
}

// ceil(log2(x)) for x >= 1.
inline unsigned ceil_log2(std::uint64_t x) {
    return x <= 1 ? 0U : bits_for(x - 1);
}

class IntVector {
public:
    IntVector() = default;
    IntVector(std::uint64_t size, unsigned width);
    // Width chosen as bits_for(max element).
    static IntVector from_values(std::span<const std::uint64_t> values);

    [[nodiscard]] std::uint64_t size() const { return size_; }
    [[nodiscard]] unsigned width() const { return width_; }

    [[nodiscard]] std::uint64_t operator[](std::uint64_t i) const {
        if (width_ == 0) return 0;
        std::uint64_t bit = i * width_;
        std::uint64_t w = bit >> 6;
        unsigned off = bit & 63;
        std::uint64_t v = words_[w] >> off;
        if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
        return width_ == 64 ? v : v & ((std::uint64_t{1} << width_) - 1);
    }
    void set(std::uint64_t i, std::uint64_t value);

    [[nodiscard]] std::uint64_t size_bits() const { return size_ * width_; }

    void serialize(ByteWriter& out) const;
    static IntVector deserialize(ByteReader& in);

    friend bool operator==(const IntVector&, const IntVector&) = default;

private:
    std::uint64_t size_ = 0;
    unsigned width_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tgcsa
