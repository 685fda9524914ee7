#include "tgcsa/int_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgcsa {

IntVector::IntVector(std::uint64_t size, unsigned width) : size_(size), width_(width) {
    if (width > 64) throw std::invalid_argument("IntVector width above 64");
    words_.assign((size * width + 63) / 64 + 1, 0);
}

IntVector IntVector::from_values(std::span<const std::uint64_t> values) {
    std::uint64_t mx = values.empty() ? 0 : *std::max_element(values.begin(), values.end());
    IntVector iv(values.size(), bits_for(mx));
    for (std::size_t i = 0; i < values.size(); ++i) iv.set(i, values[i]);
    return iv;
}

void IntVector::set(std::uint64_t i, std::uint64_t value) {
    if (i >= size_) throw std::out_of_range("IntVector index out of range");
    if (width_ == 0) {
        if (value != 0) throw std::invalid_argument("value does not fit zero-width vector");
        return;
    }
    if (width_ < 64 && (value >> width_) != 0) throw std::invalid_argument("value wider than IntVector");
    std::uint64_t bit = i * width_;
    std::uint64_t w = bit >> 6;
    unsigned off = bit & 63;
    std::uint64_t mask = width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
    words_[w] = (words_[w] & ~(mask << off)) | (value << off);
    if (off + width_ > 64) {
        unsigned spill = off + width_ - 64;
        std::uint64_t hi_mask = (std::uint64_t{1} << spill) - 1;
        words_[w + 1] = (words_[w + 1] & ~hi_mask) | (value >> (64 - off));
    }
}

void IntVector::serialize(ByteWriter& out) const {
    out.put_u64(size_);
    out.put_u64(width_);
    out.put_words(words_);
}

IntVector IntVector::deserialize(ByteReader& in) {
    std::uint64_t size = in.get_u64();
    std::uint64_t width = in.get_u64();
    if (width > 64) throw FormatError("IntVector width above 64");
    if (width != 0 && size > in.remaining() * 8 / width) throw FormatError("IntVector size exceeds payload");
    IntVector iv;
    iv.size_ = size;
    iv.width_ = static_cast<unsigned>(width);
    iv.words_ = in.get_words((size * width + 63) / 64 + 1);
    return iv;
}

}  // namespace tgcsa
