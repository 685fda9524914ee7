#pragma once
// Interchangeable representations of the adjusted Ψ permutation.
//
// Every codec answers access(i) and range(l, r) with 1-based positions and
// values. Codecs that need the symbol-boundary bitmap D receive it as an
// argument; the index owns D.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tgcsa/bitseq.hpp"
#include "tgcsa/byte_io.hpp"
#include "tgcsa/int_vector.hpp"

namespace tgcsa {

enum class PsiCodecKind : std::uint8_t {
    plain = 0,
    vbyte_rle = 1,
    vbyte_rle_select = 2,
    huff_rle_opt = 3,
};

const char* to_string(PsiCodecKind k);
PsiCodecKind psi_codec_from_string(const std::string& s);

struct PsiShape {
    std::uint64_t n = 0;  // contacts
    unsigned arity = 4;

    [[nodiscard]] std::uint64_t length() const { return n * arity; }
    [[nodiscard]] std::uint64_t last_section_begin() const { return (arity - 1) * n + 1; }
};

class PsiCodec {
public:
    virtual ~PsiCodec() = default;

    [[nodiscard]] virtual PsiCodecKind kind() const = 0;
    [[nodiscard]] virtual std::uint64_t size() const = 0;
    // Sampling period; 0 for codecs without sampling.
    [[nodiscard]] virtual unsigned sample_period() const = 0;

    [[nodiscard]] virtual std::uint64_t access(std::uint64_t i, const BitSequence& d) const = 0;
    // Writes Ψ[l..r] into out[0..r-l]; out must hold r-l+1 entries.
    virtual void range(std::uint64_t l, std::uint64_t r, const BitSequence& d, std::span<std::uint64_t> out) const = 0;

    [[nodiscard]] virtual std::uint64_t size_bits() const = 0;
    virtual void serialize(ByteWriter& out) const = 0;

protected:
    void check_range(std::uint64_t l, std::uint64_t r, std::size_t out_size) const;
};

class PlainPsi final : public PsiCodec {
public:
    static PlainPsi build(std::span<const std::uint64_t> psi);

    PsiCodecKind kind() const override { return PsiCodecKind::plain; }
    std::uint64_t size() const override { return values_.size(); }
    unsigned sample_period() const override { return 0; }
    std::uint64_t access(std::uint64_t i, const BitSequence& d) const override;
    void range(std::uint64_t l, std::uint64_t r, const BitSequence& d, std::span<std::uint64_t> out) const override;
    std::uint64_t size_bits() const override { return values_.size_bits(); }
    void serialize(ByteWriter& out) const override;
    static PlainPsi deserialize(ByteReader& in);

private:
    IntVector values_;  // Ψ[i] - 1, ceil(log2 N) bits each
};

// Samples aligned with the ones of D, a second level every t_psi positions
// inside a symbol group, and a vbyte stream of in-group gaps where every
// maximal run of +1 gaps is a single pair <1, L>.
//
// Stream tokens: g >= 2 is a plain gap; <1, L> is a run of L unit gaps.
// Ψ must be strictly increasing inside every group.
class VbyteRlePsi final : public PsiCodec {
public:
    static VbyteRlePsi build(std::span<const std::uint64_t> psi, const BitSequence& d, PsiShape shape,
                             unsigned t_psi, bool select_variant);

    PsiCodecKind kind() const override {
        return select_ ? PsiCodecKind::vbyte_rle_select : PsiCodecKind::vbyte_rle;
    }
    std::uint64_t size() const override { return shape_.length(); }
    unsigned sample_period() const override { return t_psi_; }
    std::uint64_t access(std::uint64_t i, const BitSequence& d) const override;
    void range(std::uint64_t l, std::uint64_t r, const BitSequence& d, std::span<std::uint64_t> out) const override;
    std::uint64_t size_bits() const override;
    void serialize(ByteWriter& out) const override;
    static VbyteRlePsi deserialize(ByteReader& in, PsiShape shape, unsigned t_psi, bool select_variant);

    [[nodiscard]] const std::vector<std::uint8_t>& stream() const { return gaps_; }
    [[nodiscard]] const BitSequence& second_level() const { return d1_; }
    [[nodiscard]] std::uint64_t second_level_samples() const { return s1_.size(); }

private:
    struct Cursor {
        std::uint64_t pos = 0;
        std::uint64_t value = 0;
        const std::uint8_t* p = nullptr;
        std::uint64_t run_left = 0;
    };

    Cursor sync(std::uint64_t i, const BitSequence& d) const;
    void seek(Cursor& c, std::uint64_t target) const;
    static void step(Cursor& c);

    PsiShape shape_;
    unsigned t_psi_ = 0;
    bool select_ = false;
    std::vector<std::uint8_t> gaps_;
    IntVector s0_, ptr0_, off0_;
    BitSequence d1_;
    IntVector s1_, ptr1_, off1_;
};

// Regular sampling every t_psi positions and a canonical Huffman bit stream
// over run lengths, short gaps (up to n_sv) and 2ω escape classes.
class HuffRlePsi final : public PsiCodec {
public:
    static constexpr std::uint64_t kShortGaps = 1U << 14;  // n_sv
    static constexpr unsigned kWordBits = 64;              // ω

    static HuffRlePsi build(std::span<const std::uint64_t> psi, PsiShape shape, unsigned t_psi);

    PsiCodecKind kind() const override { return PsiCodecKind::huff_rle_opt; }
    std::uint64_t size() const override { return shape_.length(); }
    unsigned sample_period() const override { return t_psi_; }
    std::uint64_t access(std::uint64_t i, const BitSequence& d) const override;
    void range(std::uint64_t l, std::uint64_t r, const BitSequence& d, std::span<std::uint64_t> out) const override;
    std::uint64_t size_bits() const override;
    void serialize(ByteWriter& out) const override;
    static HuffRlePsi deserialize(ByteReader& in, PsiShape shape, unsigned t_psi);

private:
    struct Token {
        std::uint64_t run = 0;  // > 0: run of unit gaps
        std::int64_t gap = 0;   // otherwise a signed gap
    };
    struct Cursor {
        std::uint64_t pos = 0;
        std::int64_t value = 0;
        std::uint64_t bit = 0;
        std::uint64_t run_left = 0;
    };

    [[nodiscard]] std::uint64_t alphabet_size() const { return t_psi_ + kShortGaps + 2 * kWordBits; }
    void build_decoder();
    Token read_token(std::uint64_t& bit) const;
    [[nodiscard]] std::uint64_t read_bits(std::uint64_t& bit, unsigned count) const;
    Cursor sync(std::uint64_t i) const;
    void step(Cursor& c) const;

    PsiShape shape_;
    unsigned t_psi_ = 0;
    std::vector<std::uint64_t> stream_;
    std::uint64_t stream_bits_ = 0;
    IntVector samples_, pointers_;
    // Canonical code description: used symbols with their code lengths.
    std::vector<std::uint32_t> symbols_;
    std::vector<std::uint8_t> lengths_;
    // Decoder tables indexed by code length.
    std::vector<std::uint64_t> first_code_, first_index_, count_;
    std::vector<std::uint32_t> sorted_symbols_;
};

std::unique_ptr<PsiCodec> encode_psi(std::span<const std::uint64_t> psi, const BitSequence& d, PsiShape shape,
                                     PsiCodecKind kind, unsigned t_psi);
std::unique_ptr<PsiCodec> deserialize_psi(ByteReader& in, PsiCodecKind kind, PsiShape shape, unsigned t_psi);

}  // namespace tgcsa
