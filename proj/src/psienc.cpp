#include "tgcsa/psienc.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "tgcsa/vbyte.hpp"

namespace tgcsa {

const char* to_string(PsiCodecKind k) {
    switch (k) {
        case PsiCodecKind::plain: return "plain";
        case PsiCodecKind::vbyte_rle: return "vbyte-rle";
        case PsiCodecKind::vbyte_rle_select: return "vbyte-rle-select";
        case PsiCodecKind::huff_rle_opt: return "huff-rle-opt";
    }
    return "?";
}

PsiCodecKind psi_codec_from_string(const std::string& s) {
    if (s == "plain") return PsiCodecKind::plain;
    if (s == "vbyte-rle") return PsiCodecKind::vbyte_rle;
    if (s == "vbyte-rle-select") return PsiCodecKind::vbyte_rle_select;
    if (s == "huff-rle-opt") return PsiCodecKind::huff_rle_opt;
    throw std::invalid_argument("unknown psi codec '" + s + "'");
}

void PsiCodec::check_range(std::uint64_t l, std::uint64_t r, std::size_t out_size) const {
    if (l < 1 || l > r || r > size()) throw std::out_of_range("psi range out of bounds");
    if (out_size < r - l + 1) throw std::invalid_argument("psi range output buffer too small");
}

namespace {

void check_access(std::uint64_t i, std::uint64_t n) {
    if (i < 1 || i > n) throw std::out_of_range("psi access out of bounds");
}

}  // namespace

// --- plain -----------------------------------------------------------------

PlainPsi PlainPsi::build(std::span<const std::uint64_t> psi) {
    PlainPsi p;
    p.values_ = IntVector(psi.size(), ceil_log2(psi.size()));
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (psi[i] < 1 || psi[i] > psi.size()) throw std::invalid_argument("psi value outside [1, N]");
        p.values_.set(i, psi[i] - 1);
    }
    return p;
}

std::uint64_t PlainPsi::access(std::uint64_t i, const BitSequence&) const {
    check_access(i, size());
    return values_[i - 1] + 1;
}

void PlainPsi::range(std::uint64_t l, std::uint64_t r, const BitSequence&, std::span<std::uint64_t> out) const {
    check_range(l, r, out.size());
    for (std::uint64_t i = l; i <= r; ++i) out[i - l] = values_[i - 1] + 1;
}

void PlainPsi::serialize(ByteWriter& out) const { values_.serialize(out); }

PlainPsi PlainPsi::deserialize(ByteReader& in) {
    PlainPsi p;
    p.values_ = IntVector::deserialize(in);
    return p;
}

// --- vbyte-rle -------------------------------------------------------------

VbyteRlePsi VbyteRlePsi::build(std::span<const std::uint64_t> psi, const BitSequence& d, PsiShape shape,
                               unsigned t_psi, bool select_variant) {
    if (t_psi == 0) throw std::invalid_argument("t_psi must be positive");
    const std::uint64_t n_total = shape.length();
    if (psi.size() != n_total || d.size() != n_total) throw std::invalid_argument("psi/D length mismatch");
    if (n_total > 0 && !d.access(1)) throw std::invalid_argument("D[1] must be 1");

    VbyteRlePsi enc;
    enc.shape_ = shape;
    enc.t_psi_ = t_psi;
    enc.select_ = select_variant;
    std::vector<std::uint64_t> w(psi.size() + 1, 0);
    std::copy(psi.begin(), psi.end(), w.begin() + 1);

    std::vector<std::uint64_t> s0, ptr0, off0, s1, ptr1, off1;
    auto& bytes = enc.gaps_;
    auto record = [&](std::uint64_t pos, std::uint64_t val, std::uint64_t ptr) {
        if (!off1.empty() && off1.back() == pos) return;
        off1.push_back(pos);
        s1.push_back(val);
        ptr1.push_back(ptr);
    };

    std::uint64_t l = 1;
    while (l <= n_total) {
        std::uint64_t r = l;
        while (r + 1 <= n_total && !d.get(r + 1)) ++r;
        s0.push_back(w[l]);
        ptr0.push_back(bytes.size());
        off0.push_back(l);

        std::uint64_t cand = l + t_psi;
        std::uint64_t cur = l;
        while (cur < r) {
            std::uint64_t tok_start = bytes.size();
            auto gap = static_cast<std::int64_t>(w[cur + 1]) - static_cast<std::int64_t>(w[cur]);
            std::uint64_t len = 1;
            if (gap == 1) {
                while (cur + len + 1 <= r && w[cur + len + 1] == w[cur + len] + 1) ++len;
                vbyte::encode(1, bytes);
                vbyte::encode(len, bytes);
            } else if (gap >= 2) {
                vbyte::encode(static_cast<std::uint64_t>(gap), bytes);
            } else {
                throw std::invalid_argument("psi decreases inside a symbol group");
            }
            std::uint64_t end = cur + len;
            for (; cand <= end; cand += t_psi) {
                if (cand == end) {
                    record(end, w[end], bytes.size());
                } else if (cur > l) {
                    // Inside a run: the sample is the run-entry state.
                    record(cur, w[cur], tok_start);
                }
            }
            cur = end;
        }
        l = r + 1;
    }

    enc.s0_ = IntVector::from_values(s0);
    enc.ptr0_ = IntVector::from_values(ptr0);
    enc.s1_ = IntVector::from_values(s1);
    enc.ptr1_ = IntVector::from_values(ptr1);
    if (!select_variant) {
        enc.off0_ = IntVector::from_values(off0);
        enc.off1_ = IntVector::from_values(off1);
    }
    if (!off1.empty()) enc.d1_ = BitSequence::from_positions(n_total, off1);
    return enc;
}

void VbyteRlePsi::step(Cursor& c) {
    ++c.pos;
    if (c.run_left > 0) {
        ++c.value;
        --c.run_left;
        return;
    }
    std::uint64_t code = vbyte::decode_unchecked(c.p);
    if (code == 1) {
        c.run_left = vbyte::decode_unchecked(c.p) - 1;
        ++c.value;
    } else {
        c.value += code;
    }
}

void VbyteRlePsi::seek(Cursor& c, std::uint64_t target) const {
    while (c.pos < target) {
        if (c.run_left > 0) {
            std::uint64_t s = std::min(c.run_left, target - c.pos);
            c.pos += s;
            c.value += s;
            c.run_left -= s;
            continue;
        }
        std::uint64_t code = vbyte::decode_unchecked(c.p);
        if (code == 1) {
            c.run_left = vbyte::decode_unchecked(c.p);
        } else {
            c.value += code;
            ++c.pos;
        }
    }
}

VbyteRlePsi::Cursor VbyteRlePsi::sync(std::uint64_t i, const BitSequence& d) const {
    std::uint64_t grp = d.rank1_unchecked(i);
    std::uint64_t l = select_ ? d.select1(grp) : off0_[grp - 1];
    Cursor c{l, s0_[grp - 1], gaps_.data() + ptr0_[grp - 1], 0};
    if (l == i) return c;
    if (d1_.size() != 0) {
        if (std::uint64_t k = d1_.rank1_unchecked(i); k > 0) {
            std::uint64_t pk = select_ ? d1_.select1(k) : off1_[k - 1];
            if (pk > l) c = Cursor{pk, s1_[k - 1], gaps_.data() + ptr1_[k - 1], 0};
        }
    }
    seek(c, i);
    return c;
}

std::uint64_t VbyteRlePsi::access(std::uint64_t i, const BitSequence& d) const {
    check_access(i, size());
    if (d.get(i)) return s0_[d.rank1_unchecked(i) - 1];
    return sync(i, d).value;
}

void VbyteRlePsi::range(std::uint64_t l, std::uint64_t r, const BitSequence& d, std::span<std::uint64_t> out) const {
    check_range(l, r, out.size());
    Cursor c = sync(l, d);
    std::uint64_t grp = d.rank1_unchecked(l);
    out[0] = c.value;
    for (std::uint64_t j = l + 1; j <= r; ++j) {
        if (d.get(j)) {
            ++grp;
            c = Cursor{j, s0_[grp - 1], gaps_.data() + ptr0_[grp - 1], 0};
        } else {
            step(c);
        }
        out[j - l] = c.value;
    }
}

std::uint64_t VbyteRlePsi::size_bits() const {
    std::uint64_t bits = gaps_.size() * 8 + s0_.size_bits() + ptr0_.size_bits() + s1_.size_bits() +
                         ptr1_.size_bits() + d1_.size_bits();
    if (!select_) bits += off0_.size_bits() + off1_.size_bits();
    return bits;
}

void VbyteRlePsi::serialize(ByteWriter& out) const {
    ByteWriter stream;
    stream.put_bytes(gaps_);
    out.put_section(stream);
    s0_.serialize(out);
    ptr0_.serialize(out);
    d1_.serialize(out);
    s1_.serialize(out);
    ptr1_.serialize(out);
    if (!select_) {
        off0_.serialize(out);
        off1_.serialize(out);
    }
}

VbyteRlePsi VbyteRlePsi::deserialize(ByteReader& in, PsiShape shape, unsigned t_psi, bool select_variant) {
    VbyteRlePsi enc;
    enc.shape_ = shape;
    enc.t_psi_ = t_psi;
    enc.select_ = select_variant;
    ByteReader stream = in.get_section();
    auto bytes = stream.get_bytes(stream.remaining());
    enc.gaps_.assign(bytes.begin(), bytes.end());
    enc.s0_ = IntVector::deserialize(in);
    enc.ptr0_ = IntVector::deserialize(in);
    enc.d1_ = BitSequence::deserialize(in);
    enc.s1_ = IntVector::deserialize(in);
    enc.ptr1_ = IntVector::deserialize(in);
    if (!select_variant) {
        enc.off0_ = IntVector::deserialize(in);
        enc.off1_ = IntVector::deserialize(in);
        if (enc.off0_.size() != enc.s0_.size() || enc.off1_.size() != enc.s1_.size()) {
            throw FormatError("vbyte-rle sample arrays disagree in length");
        }
    }
    if (enc.ptr0_.size() != enc.s0_.size() || enc.ptr1_.size() != enc.s1_.size() ||
        (enc.d1_.size() != 0 && enc.d1_.size() != shape.length()) || enc.d1_.count_ones() != enc.s1_.size()) {
        throw FormatError("vbyte-rle sample arrays disagree in length");
    }
    for (std::uint64_t k = 0; k < enc.ptr0_.size(); ++k) {
        if (enc.ptr0_[k] > enc.gaps_.size()) throw FormatError("vbyte-rle pointer beyond stream");
    }
    for (std::uint64_t k = 0; k < enc.ptr1_.size(); ++k) {
        if (enc.ptr1_[k] > enc.gaps_.size()) throw FormatError("vbyte-rle pointer beyond stream");
    }
    return enc;
}

// --- huff-rle-opt ----------------------------------------------------------

namespace {

class BitWriter {
public:
    void put(bool b) {
        if (bits_ % 64 == 0) words_.push_back(0);
        if (b) words_.back() |= std::uint64_t{1} << (bits_ % 64);
        ++bits_;
    }
    void put_code(std::uint64_t code, unsigned len) {
        for (unsigned k = len; k-- > 0;) put((code >> k) & 1U);
    }
    void put_raw(std::uint64_t v, unsigned len) {
        for (unsigned k = 0; k < len; ++k) put((v >> k) & 1U);
    }
    [[nodiscard]] std::uint64_t bits() const { return bits_; }
    std::vector<std::uint64_t> take() { return std::move(words_); }

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t bits_ = 0;
};

// Huffman code lengths for the symbols with non-zero frequency, capped at max_len.
std::vector<std::uint8_t> huffman_lengths(std::vector<std::uint64_t> freq, unsigned max_len) {
    const std::size_t m = freq.size();
    while (true) {
        std::vector<std::uint8_t> len(m, 0);
        using Item = std::pair<std::uint64_t, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        std::vector<std::size_t> parent;
        parent.reserve(2 * m);
        for (std::size_t s = 0; s < m; ++s) {
            if (freq[s] == 0) continue;
            heap.push({freq[s], parent.size()});
            parent.push_back(0);
        }
        if (parent.empty()) return len;
        std::vector<std::size_t> leaf_symbol;
        for (std::size_t s = 0; s < m; ++s) {
            if (freq[s] != 0) leaf_symbol.push_back(s);
        }
        if (parent.size() == 1) {
            len[leaf_symbol[0]] = 1;
            return len;
        }
        while (heap.size() > 1) {
            auto [fa, a] = heap.top();
            heap.pop();
            auto [fb, b] = heap.top();
            heap.pop();
            std::size_t node = parent.size();
            parent.push_back(node);
            parent[a] = node;
            parent[b] = node;
            heap.push({fa + fb, node});
        }
        std::vector<unsigned> depth(parent.size(), 0);
        for (std::size_t k = parent.size() - 1; k-- > 0;) depth[k] = depth[parent[k]] + 1;
        unsigned longest = 0;
        for (std::size_t k = 0; k < leaf_symbol.size(); ++k) {
            len[leaf_symbol[k]] = static_cast<std::uint8_t>(depth[k]);
            longest = std::max(longest, depth[k]);
        }
        if (longest <= max_len) return len;
        for (auto& f : freq) {
            if (f != 0) f = (f + 1) / 2;
        }
    }
}

}  // namespace

HuffRlePsi HuffRlePsi::build(std::span<const std::uint64_t> psi, PsiShape shape, unsigned t_psi) {
    if (t_psi == 0) throw std::invalid_argument("t_psi must be positive");
    const std::uint64_t n_total = shape.length();
    if (psi.size() != n_total) throw std::invalid_argument("psi length mismatch");

    HuffRlePsi enc;
    enc.shape_ = shape;
    enc.t_psi_ = t_psi;
    std::vector<std::uint64_t> w(psi.size() + 1, 0);
    std::copy(psi.begin(), psi.end(), w.begin() + 1);
    const std::uint64_t alpha = enc.alphabet_size();

    struct Coded {
        std::uint32_t symbol;
        std::uint64_t raw;
        unsigned raw_bits;
    };
    std::vector<Coded> tokens;
    std::vector<std::uint64_t> sample_vals, token_starts;
    for (std::uint64_t start = 1; start <= n_total; start += t_psi) {
        std::uint64_t end = std::min(start + t_psi - 1, n_total);
        sample_vals.push_back(w[start]);
        token_starts.push_back(tokens.size());
        std::uint64_t cur = start;
        while (cur < end) {
            auto gap = static_cast<std::int64_t>(w[cur + 1]) - static_cast<std::int64_t>(w[cur]);
            if (gap == 1) {
                std::uint64_t len = 1;
                while (cur + len + 1 <= end && w[cur + len + 1] == w[cur + len] + 1) ++len;
                tokens.push_back({static_cast<std::uint32_t>(len - 1), 0, 0});
                cur += len;
                continue;
            }
            if (gap >= 2 && static_cast<std::uint64_t>(gap) <= kShortGaps + 1) {
                tokens.push_back({static_cast<std::uint32_t>(t_psi + gap - 2), 0, 0});
            } else {
                bool negative = gap < 0;
                std::uint64_t mag = negative ? static_cast<std::uint64_t>(-gap) : static_cast<std::uint64_t>(gap);
                unsigned b = std::max(1U, bits_for(mag));
                auto sym = static_cast<std::uint32_t>(t_psi + kShortGaps + (negative ? kWordBits : 0) + b - 1);
                tokens.push_back({sym, mag, b});
            }
            ++cur;
        }
    }

    std::vector<std::uint64_t> freq(alpha, 0);
    for (const auto& t : tokens) ++freq[t.symbol];
    auto lens = huffman_lengths(freq, 57);
    for (std::uint32_t s = 0; s < alpha; ++s) {
        if (lens[s] != 0) {
            enc.symbols_.push_back(s);
            enc.lengths_.push_back(lens[s]);
        }
    }
    enc.build_decoder();

    // Canonical code per symbol.
    std::vector<std::uint64_t> code_of(alpha, 0);
    for (std::size_t len = 1; len < enc.count_.size(); ++len) {
        for (std::uint64_t k = 0; k < enc.count_[len]; ++k) {
            code_of[enc.sorted_symbols_[enc.first_index_[len] + k]] = enc.first_code_[len] + k;
        }
    }

    BitWriter bw;
    std::vector<std::uint64_t> ptrs;
    std::size_t next_sample = 0;
    for (std::size_t k = 0; k < tokens.size() || next_sample < token_starts.size(); ++k) {
        while (next_sample < token_starts.size() && token_starts[next_sample] == k) {
            ptrs.push_back(bw.bits());
            ++next_sample;
        }
        if (k >= tokens.size()) break;
        const auto& t = tokens[k];
        bw.put_code(code_of[t.symbol], lens[t.symbol]);
        if (t.raw_bits) bw.put_raw(t.raw, t.raw_bits);
    }
    enc.stream_bits_ = bw.bits();
    enc.stream_ = bw.take();
    enc.samples_ = IntVector::from_values(sample_vals);
    enc.pointers_ = IntVector::from_values(ptrs);
    return enc;
}

void HuffRlePsi::build_decoder() {
    unsigned maxlen = 0;
    for (auto l : lengths_) maxlen = std::max<unsigned>(maxlen, l);
    count_.assign(maxlen + 1, 0);
    first_code_.assign(maxlen + 1, 0);
    first_index_.assign(maxlen + 1, 0);
    std::vector<std::size_t> order(symbols_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lengths_[a] != lengths_[b] ? lengths_[a] < lengths_[b] : symbols_[a] < symbols_[b];
    });
    sorted_symbols_.clear();
    for (auto k : order) sorted_symbols_.push_back(symbols_[k]);
    for (auto l : lengths_) ++count_[l];
    std::uint64_t code = 0;
    std::uint64_t index = 0;
    for (unsigned len = 1; len <= maxlen; ++len) {
        code <<= 1;
        first_code_[len] = code;
        first_index_[len] = index;
        code += count_[len];
        index += count_[len];
    }
}

std::uint64_t HuffRlePsi::read_bits(std::uint64_t& bit, unsigned count) const {
    std::uint64_t v = 0;
    for (unsigned k = 0; k < count; ++k, ++bit) {
        v |= ((stream_[bit >> 6] >> (bit & 63)) & 1U) << k;
    }
    return v;
}

HuffRlePsi::Token HuffRlePsi::read_token(std::uint64_t& bit) const {
    std::uint64_t code = 0;
    for (std::size_t len = 1; len < count_.size(); ++len) {
        code = (code << 1) | ((stream_[bit >> 6] >> (bit & 63)) & 1U);
        ++bit;
        if (code - first_code_[len] < count_[len]) {
            std::uint64_t sym = sorted_symbols_[first_index_[len] + code - first_code_[len]];
            if (sym < t_psi_) return Token{sym + 1, 0};
            sym -= t_psi_;
            if (sym < kShortGaps) return Token{0, static_cast<std::int64_t>(sym + 2)};
            sym -= kShortGaps;
            bool negative = sym >= kWordBits;
            unsigned b = static_cast<unsigned>(sym % kWordBits) + 1;
            auto mag = static_cast<std::int64_t>(read_bits(bit, b));
            return Token{0, negative ? -mag : mag};
        }
    }
    throw FormatError("huff-rle-opt: invalid codeword");
}

HuffRlePsi::Cursor HuffRlePsi::sync(std::uint64_t i) const {
    std::uint64_t k = (i - 1) / t_psi_;
    Cursor c{k * t_psi_ + 1, static_cast<std::int64_t>(samples_[k]), pointers_[k], 0};
    while (c.pos < i) {
        if (c.run_left > 0) {
            std::uint64_t s = std::min(c.run_left, i - c.pos);
            c.pos += s;
            c.value += static_cast<std::int64_t>(s);
            c.run_left -= s;
            continue;
        }
        Token t = read_token(c.bit);
        if (t.run > 0) {
            c.run_left = t.run;
        } else {
            c.value += t.gap;
            ++c.pos;
        }
    }
    return c;
}

void HuffRlePsi::step(Cursor& c) const {
    ++c.pos;
    if ((c.pos - 1) % t_psi_ == 0) {
        std::uint64_t k = (c.pos - 1) / t_psi_;
        c.value = static_cast<std::int64_t>(samples_[k]);
        c.bit = pointers_[k];
        c.run_left = 0;
        return;
    }
    if (c.run_left > 0) {
        ++c.value;
        --c.run_left;
        return;
    }
    Token t = read_token(c.bit);
    if (t.run > 0) {
        c.run_left = t.run - 1;
        ++c.value;
    } else {
        c.value += t.gap;
    }
}

std::uint64_t HuffRlePsi::access(std::uint64_t i, const BitSequence&) const {
    check_access(i, size());
    return sync(i).value;
}

void HuffRlePsi::range(std::uint64_t l, std::uint64_t r, const BitSequence&, std::span<std::uint64_t> out) const {
    check_range(l, r, out.size());
    Cursor c = sync(l);
    out[0] = c.value;
    for (std::uint64_t j = l + 1; j <= r; ++j) {
        step(c);
        out[j - l] = c.value;
    }
}

std::uint64_t HuffRlePsi::size_bits() const {
    std::uint64_t table = symbols_.size() * (bits_for(alphabet_size() - 1) + 6);
    return stream_bits_ + samples_.size_bits() + pointers_.size_bits() + table;
}

void HuffRlePsi::serialize(ByteWriter& out) const {
    out.put_u64(stream_bits_);
    out.put_words(stream_);
    samples_.serialize(out);
    pointers_.serialize(out);
    out.put_u64(symbols_.size());
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
        out.put_u32(symbols_[k]);
        out.put_u8(lengths_[k]);
    }
    out.align8();
}

HuffRlePsi HuffRlePsi::deserialize(ByteReader& in, PsiShape shape, unsigned t_psi) {
    HuffRlePsi enc;
    enc.shape_ = shape;
    enc.t_psi_ = t_psi;
    enc.stream_bits_ = in.get_u64();
    enc.stream_ = in.get_words((enc.stream_bits_ + 63) / 64);
    enc.samples_ = IntVector::deserialize(in);
    enc.pointers_ = IntVector::deserialize(in);
    std::uint64_t nsym = in.get_u64();
    if (nsym > enc.alphabet_size()) throw FormatError("huff-rle-opt: too many code lengths");
    for (std::uint64_t k = 0; k < nsym; ++k) {
        enc.symbols_.push_back(in.get_u32());
        enc.lengths_.push_back(in.get_u8());
        if (enc.symbols_.back() >= enc.alphabet_size() || enc.lengths_.back() == 0 || enc.lengths_.back() > 63) {
            throw FormatError("huff-rle-opt: bad code length entry");
        }
    }
    in.align8();
    std::uint64_t expected_samples = t_psi == 0 ? 0 : (shape.length() + t_psi - 1) / t_psi;
    if (enc.samples_.size() != expected_samples || enc.pointers_.size() != expected_samples) {
        throw FormatError("huff-rle-opt: sample count mismatch");
    }
    enc.build_decoder();
    return enc;
}

// ---------------------------------------------------------------------------

std::unique_ptr<PsiCodec> encode_psi(std::span<const std::uint64_t> psi, const BitSequence& d, PsiShape shape,
                                     PsiCodecKind kind, unsigned t_psi) {
    switch (kind) {
        case PsiCodecKind::plain:
            return std::make_unique<PlainPsi>(PlainPsi::build(psi));
        case PsiCodecKind::vbyte_rle:
        case PsiCodecKind::vbyte_rle_select:
            return std::make_unique<VbyteRlePsi>(
                VbyteRlePsi::build(psi, d, shape, t_psi, kind == PsiCodecKind::vbyte_rle_select));
        case PsiCodecKind::huff_rle_opt:
            return std::make_unique<HuffRlePsi>(HuffRlePsi::build(psi, shape, t_psi));
    }
    throw std::invalid_argument("unknown psi codec");
}

std::unique_ptr<PsiCodec> deserialize_psi(ByteReader& in, PsiCodecKind kind, PsiShape shape, unsigned t_psi) {
    std::unique_ptr<PsiCodec> codec;
    switch (kind) {
        case PsiCodecKind::plain:
            codec = std::make_unique<PlainPsi>(PlainPsi::deserialize(in));
            break;
        case PsiCodecKind::vbyte_rle:
        case PsiCodecKind::vbyte_rle_select:
            if (t_psi == 0) throw FormatError("vbyte-rle requires a positive t_psi");
            codec = std::make_unique<VbyteRlePsi>(
                VbyteRlePsi::deserialize(in, shape, t_psi, kind == PsiCodecKind::vbyte_rle_select));
            break;
        case PsiCodecKind::huff_rle_opt:
            if (t_psi == 0) throw FormatError("huff-rle-opt requires a positive t_psi");
            codec = std::make_unique<HuffRlePsi>(HuffRlePsi::deserialize(in, shape, t_psi));
            break;
        default:
            throw FormatError("unknown psi codec tag");
    }
    if (codec->size() != shape.length()) throw FormatError("psi length does not match header");
    return codec;
}

}  // namespace tgcsa
