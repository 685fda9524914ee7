#pragma once
// Construction of the self-index: rotation array over Sid, the successor
// permutation Ψ with the last section folded back onto its own contact, and
// the symbol-boundary bitmap D.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tgcsa/bitseq.hpp"
#include "tgcsa/corpus.hpp"
#include "tgcsa/psienc.hpp"

namespace tgcsa {

// Builder-only arrays. Values are 1-based positions; storage is 0-based
// (a[q - 1] holds A[q]).
struct BuildArtifacts {
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> a_inv;
};

// Sorts the suffixes of sid, with the end of the text ordered after every
// symbol. Equal contacts therefore keep their text order.
BuildArtifacts build_rotation_array(std::span<const std::uint64_t> sid);
std::vector<std::uint64_t> compute_psi(const BuildArtifacts& ba);
// Entries of the last section are redirected to the first-section entry of the
// same contact: Ψ[i] <- ((Ψ[i] - 2) mod n) + 1.
void cyclic_adjust_psi(std::span<std::uint64_t> psi, std::uint64_t n, unsigned arity);
BitSequence build_d(const BuildArtifacts& ba, std::span<const std::uint64_t> sid);

struct BuildOptions {
    PsiCodecKind codec = PsiCodecKind::vbyte_rle;
    unsigned t_psi = 64;
};

class TgcsaIndex {
public:
    TgcsaIndex() = default;
    TgcsaIndex(AlphabetMap am, BitSequence d, std::unique_ptr<PsiCodec> psi, std::uint64_t n, TimeModel model);

    [[nodiscard]] const AlphabetMap& alphabet() const { return am_; }
    [[nodiscard]] const BitSequence& d() const { return d_; }
    [[nodiscard]] const PsiCodec& codec() const { return *psi_; }
    [[nodiscard]] std::uint64_t contacts() const { return n_; }
    [[nodiscard]] unsigned arity() const { return am_.arity(); }
    [[nodiscard]] TimeModel model() const { return model_; }
    [[nodiscard]] std::uint64_t length() const { return n_ * am_.arity(); }
    [[nodiscard]] std::uint64_t sigma() const { return am_.sigma(); }
    [[nodiscard]] PsiShape shape() const { return {n_, am_.arity()}; }

    [[nodiscard]] std::uint64_t psi(std::uint64_t i) const { return psi_->access(i, d_); }
    void psi_range(std::uint64_t l, std::uint64_t r, std::span<std::uint64_t> out) const {
        psi_->range(l, r, d_, out);
    }
    [[nodiscard]] std::vector<std::uint64_t> decode_psi() const;

    // B + D + Ψ encoding.
    [[nodiscard]] std::uint64_t size_bits() const;

private:
    AlphabetMap am_;
    BitSequence d_;
    std::unique_ptr<PsiCodec> psi_ = std::make_unique<PlainPsi>();
    std::uint64_t n_ = 0;
    TimeModel model_ = TimeModel::interval;
};

TgcsaIndex build_index(const ContactSet& cs, const BuildOptions& opts = {});

// Structural checks on an index; empty result means no violations.
std::vector<std::string> verify_core(const TgcsaIndex& idx);
std::vector<std::string> verify_core(std::span<const std::uint64_t> psi, const BitSequence& d, std::uint64_t n,
                                     unsigned arity, std::uint64_t sigma);

}  // namespace tgcsa
