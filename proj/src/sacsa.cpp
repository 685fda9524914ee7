#include "tgcsa/sacsa.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tgcsa {

BuildArtifacts build_rotation_array(std::span<const std::uint64_t> sid) {
    const std::uint64_t len = sid.size();
    BuildArtifacts ba;
    if (len == 0) return ba;

    // Prefix doubling over suffixes. Running off the end of the text compares
    // greater than any symbol, so equal contacts keep their text order and no
    // two suffixes ever tie.
    constexpr std::uint64_t kPastEnd = ~std::uint64_t{0};
    std::vector<std::uint64_t> rank(sid.begin(), sid.end());
    std::vector<std::uint64_t> order(len);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::uint64_t> next(len);
    for (std::uint64_t k = 1;; k <<= 1) {
        auto key = [&](std::uint64_t i) { return std::pair{rank[i], i + k < len ? rank[i + k] : kPastEnd}; };
        std::sort(order.begin(), order.end(), [&](std::uint64_t x, std::uint64_t y) { return key(x) < key(y); });
        next[order[0]] = 1;
        for (std::uint64_t j = 1; j < len; ++j) {
            next[order[j]] = next[order[j - 1]] + (key(order[j - 1]) < key(order[j]) ? 1 : 0);
        }
        rank.swap(next);
        if (rank[order[len - 1]] == len) break;
    }

    ba.a.resize(len);
    ba.a_inv.resize(len);
    for (std::uint64_t q = 0; q < len; ++q) {
        ba.a[q] = order[q] + 1;
        ba.a_inv[order[q]] = q + 1;
    }
    return ba;
}

std::vector<std::uint64_t> compute_psi(const BuildArtifacts& ba) {
    const std::uint64_t len = ba.a.size();
    std::vector<std::uint64_t> psi(len);
    for (std::uint64_t i = 0; i < len; ++i) psi[i] = ba.a_inv[ba.a[i] % len];
    return psi;
}

void cyclic_adjust_psi(std::span<std::uint64_t> psi, std::uint64_t n, unsigned arity) {
    if (psi.size() != n * arity) throw std::invalid_argument("psi length is not arity * n");
    for (std::uint64_t i = (arity - 1) * n; i < psi.size(); ++i) psi[i] = (psi[i] + n - 2) % n + 1;
}

BitSequence build_d(const BuildArtifacts& ba, std::span<const std::uint64_t> sid) {
    std::vector<bool> bits(ba.a.size(), false);
    for (std::size_t i = 0; i < ba.a.size(); ++i) {
        bits[i] = i == 0 || sid[ba.a[i] - 1] != sid[ba.a[i - 1] - 1];
    }
    return BitSequence::from_bits(bits);
}

// ---------------------------------------------------------------------------

TgcsaIndex::TgcsaIndex(AlphabetMap am, BitSequence d, std::unique_ptr<PsiCodec> psi, std::uint64_t n,
                       TimeModel model)
    : am_(std::move(am)), d_(std::move(d)), psi_(std::move(psi)), n_(n), model_(model) {
    if (d_.size() != length() || psi_->size() != length()) {
        throw std::invalid_argument("index parts disagree on length");
    }
    if (d_.count_ones() != am_.sigma()) throw std::invalid_argument("D popcount differs from sigma");
}

std::vector<std::uint64_t> TgcsaIndex::decode_psi() const {
    std::vector<std::uint64_t> out(length());
    if (!out.empty()) psi_range(1, length(), out);
    return out;
}

std::uint64_t TgcsaIndex::size_bits() const {
    return am_.used().size_bits() + d_.size_bits() + psi_->size_bits();
}

TgcsaIndex build_index(const ContactSet& cs, const BuildOptions& opts) {
    AlphabetMap am = AlphabetMap::build(cs);
    auto sid = build_sid(cs, am);
    auto ba = build_rotation_array(sid);
    const std::uint64_t n = cs.size();
    for (std::uint64_t q = 1; q <= n; ++q) {
        if (ba.a[q - 1] != cs.arity * (q - 1) + 1) {
            throw std::logic_error("rotation array: first section is not in contact order");
        }
    }
    auto psi = compute_psi(ba);
    if (n > 0) cyclic_adjust_psi(psi, n, cs.arity);
    BitSequence d = build_d(ba, sid);
    PsiShape shape{n, cs.arity};
    auto codec = encode_psi(psi, d, shape, opts.codec, opts.t_psi);
    return TgcsaIndex(std::move(am), std::move(d), std::move(codec), n, cs.model);
}

std::vector<std::string> verify_core(std::span<const std::uint64_t> psi, const BitSequence& d, std::uint64_t n,
                                     unsigned arity, std::uint64_t sigma) {
    std::vector<std::string> out;
    constexpr std::size_t kMaxReports = 50;
    auto report = [&](std::string msg) {
        if (out.size() < kMaxReports) out.push_back(std::move(msg));
    };
    const std::uint64_t len = n * arity;
    if (psi.size() != len) report("psi length " + std::to_string(psi.size()) + " != arity*n " + std::to_string(len));
    if (d.size() != len) report("D length " + std::to_string(d.size()) + " != arity*n " + std::to_string(len));
    if (d.count_ones() != sigma) {
        report("D popcount " + std::to_string(d.count_ones()) + " != sigma " + std::to_string(sigma));
    }
    if (len > 0 && d.size() > 0 && !d.access(1)) report("D[1] is 0");
    if (!out.empty() || len == 0) return out;

    auto section = [&](std::uint64_t pos) { return (pos - 1) / n + 1; };
    std::vector<bool> seen(len + 1, false);
    for (std::uint64_t i = 1; i <= len; ++i) {
        std::uint64_t v = psi[i - 1];
        if (v < 1 || v > len) {
            report("psi[" + std::to_string(i) + "] = " + std::to_string(v) + " outside [1, N]");
            continue;
        }
        if (seen[v]) report("psi is not a permutation: value " + std::to_string(v) + " repeated");
        seen[v] = true;
        std::uint64_t want = section(i) % arity + 1;
        if (section(v) != want) {
            report("section advance broken at " + std::to_string(i) + ": section " + std::to_string(section(i)) +
                   " -> " + std::to_string(section(v)));
        }
    }
    for (std::uint64_t i = 1; i <= len; ++i) {
        std::uint64_t p = i;
        unsigned steps = 0;
        do {
            std::uint64_t v = psi[p - 1];
            if (v < 1 || v > len) break;
            p = v;
            ++steps;
        } while (p != i && steps <= arity);
        if (p != i || steps != arity) {
            report("cycle through " + std::to_string(i) + " does not have length " + std::to_string(arity));
        }
    }
    return out;
}

std::vector<std::string> verify_core(const TgcsaIndex& idx) {
    auto psi = idx.decode_psi();
    return verify_core(psi, idx.d(), idx.contacts(), idx.arity(), idx.sigma());
}

}  // namespace tgcsa
