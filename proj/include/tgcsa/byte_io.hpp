#pragma once
// Little-endian byte buffers used by every on-disk structure.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgcsa {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ByteWriter {
public:
    void put_u8(std::uint8_t v) { buf_.push_back(v); }
    void put_u16(std::uint16_t v) { put_le(v, 2); }
    void put_u32(std::uint32_t v) { put_le(v, 4); }
    void put_u64(std::uint64_t v) { put_le(v, 8); }
    void put_bytes(std::span<const std::uint8_t> bytes) {
        buf_.insert(buf_.end(), bytes.begin(), bytes.end());
    }
    void put_words(std::span<const std::uint64_t> words) {
        for (auto w : words) put_u64(w);
    }
    // Zero-fill up to the next multiple of 8 bytes.
    void align8() {
        while (buf_.size() % 8 != 0) buf_.push_back(0);
    }
    // Nested section: u64 byte length, payload, padding to 8.
    void put_section(const ByteWriter& inner) {
        put_u64(inner.size());
        put_bytes(inner.bytes());
        align8();
    }

    [[nodiscard]] std::size_t size() const { return buf_.size(); }
    [[nodiscard]] const std::vector<std::uint8_t>& bytes() const { return buf_; }
    std::vector<std::uint8_t> take() { return std::move(buf_); }

private:
    void put_le(std::uint64_t v, int n) {
        for (int i = 0; i < n; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    std::vector<std::uint8_t> buf_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t get_u8() { return static_cast<std::uint8_t>(get_le(1)); }
    std::uint16_t get_u16() { return static_cast<std::uint16_t>(get_le(2)); }
    std::uint32_t get_u32() { return static_cast<std::uint32_t>(get_le(4)); }
    std::uint64_t get_u64() { return get_le(8); }

    std::span<const std::uint8_t> get_bytes(std::size_t n) {
        need(n);
        auto out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }
    std::vector<std::uint64_t> get_words(std::size_t n) {
        if (n > remaining() / 8) throw FormatError("truncated word array");
        std::vector<std::uint64_t> out(n);
        for (auto& w : out) w = get_u64();
        return out;
    }
    void align8() {
        std::size_t pad = (8 - pos_ % 8) % 8;
        get_bytes(pad);
    }
    ByteReader get_section() {
        std::uint64_t len = get_u64();
        if (len > remaining()) throw FormatError("section length exceeds file");
        ByteReader inner(get_bytes(static_cast<std::size_t>(len)));
        align8();
        return inner;
    }

    [[nodiscard]] std::size_t remaining() const { return data_.size() - pos_; }
    [[nodiscard]] bool at_end() const { return pos_ == data_.size(); }
    void expect_end(const char* what) const {
        if (!at_end()) throw FormatError(std::string("trailing bytes in ") + what);
    }

private:
    void need(std::size_t n) const {
        if (n > remaining()) throw FormatError("unexpected end of data");
    }
    std::uint64_t get_le(int n) {
        need(static_cast<std::size_t>(n));
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i) v |= std::uint64_t{data_[pos_ + i]} << (8 * i);
        pos_ += static_cast<std::size_t>(n);
        return v;
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

}  // namespace tgcsa
