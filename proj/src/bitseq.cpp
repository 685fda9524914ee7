#include "tgcsa/bitseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgcsa {

namespace {

std::uint64_t select_in_word(std::uint64_t w, std::uint64_t k) {
    // k is 1-based and w is known to hold at least k ones.
    for (std::uint64_t i = 1; i < k; ++i) w &= w - 1;
    return static_cast<std::uint64_t>(__builtin_ctzll(w));
}

}  // namespace

BitSequence::BitSequence(std::uint64_t length, std::vector<std::uint64_t> words)
    : length_(length), words_(std::move(words)) {
    build_directory();
}

BitSequence BitSequence::from_bits(const std::vector<bool>& bits) {
    std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) words[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    return BitSequence(bits.size(), std::move(words));
}

BitSequence BitSequence::from_string(std::string_view bits) {
    std::vector<bool> v;
    for (char c : bits) {
        if (c == '0' || c == '1') {
            v.push_back(c == '1');
        } else if (c != ' ' && c != '\n' && c != '\t') {
            throw std::invalid_argument("bit string holds a character other than 0/1");
        }
    }
    return from_bits(v);
}

BitSequence BitSequence::from_positions(std::uint64_t length, std::span<const std::uint64_t> ones) {
    std::vector<std::uint64_t> words((length + 63) / 64, 0);
    for (auto p : ones) {
        if (p < 1 || p > length) throw std::out_of_range("bit position outside sequence");
        words[(p - 1) >> 6] |= std::uint64_t{1} << ((p - 1) & 63);
    }
    return BitSequence(length, std::move(words));
}

void BitSequence::build_directory() {
    std::uint64_t nwords = words_.size();
    super_.assign(nwords / kWordsPerSuper + 2, 0);
    blocks_.assign(nwords + 1, 0);
    std::uint64_t total = 0;
    std::uint64_t in_super = 0;
    for (std::uint64_t w = 0; w <= nwords; ++w) {
        if (w % kWordsPerSuper == 0) {
            super_[w / kWordsPerSuper] = total;
            in_super = 0;
        }
        blocks_[w] = static_cast<std::uint16_t>(in_super);
        if (w < nwords) {
            auto c = static_cast<std::uint64_t>(__builtin_popcountll(words_[w]));
            total += c;
            in_super += c;
        }
    }
    super_.back() = total;
    ones_ = total;
}

bool BitSequence::access(std::uint64_t pos) const {
    if (pos < 1 || pos > length_) throw std::out_of_range("access position out of range");
    return get(pos);
}

std::uint64_t BitSequence::rank1(std::uint64_t pos) const {
    if (pos > length_) throw std::out_of_range("rank position out of range");
    return rank1_unchecked(pos);
}

std::uint64_t BitSequence::select1(std::uint64_t k) const {
    if (k < 1 || k > ones_) throw std::out_of_range("select1: no such one");
    // Last superblock whose absolute count is < k.
    std::uint64_t nsuper = (words_.size() + kWordsPerSuper - 1) / kWordsPerSuper;
    auto first = super_.begin();
    auto it = std::lower_bound(first, first + static_cast<std::ptrdiff_t>(nsuper), k);
    std::uint64_t s = static_cast<std::uint64_t>(it - first) - 1;
    std::uint64_t w = s * kWordsPerSuper;
    std::uint64_t wend = std::min<std::uint64_t>(w + kWordsPerSuper, words_.size());
    std::uint64_t base = super_[s];
    while (w + 1 < wend && base + blocks_[w + 1] < k) ++w;
    std::uint64_t remaining = k - base - blocks_[w];
    return w * 64 + select_in_word(words_[w], remaining) + 1;
}

std::uint64_t BitSequence::size_bits() const {
    return words_.size() * 64 + super_.size() * 64 + blocks_.size() * 16;
}

std::string BitSequence::to_string() const {
    std::string s;
    s.reserve(length_);
    for (std::uint64_t i = 1; i <= length_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

void BitSequence::serialize(ByteWriter& out) const {
    out.put_u64(length_);
    out.put_words(words_);
}

BitSequence BitSequence::deserialize(ByteReader& in) {
    std::uint64_t length = in.get_u64();
    if (length > in.remaining() * 8) throw FormatError("bit sequence length exceeds payload");
    auto words = in.get_words((length + 63) / 64);
    if (length % 64 != 0 && !words.empty() && (words.back() >> (length % 64)) != 0) {
        throw FormatError("bit sequence padding is not zero");
    }
    return BitSequence(length, std::move(words));
}

}  // namespace tgcsa
