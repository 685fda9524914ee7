#include "tgcsa/index_file.hpp"

#include <cstring>
#include <fstream>
#include <iterator>

namespace tgcsa {

namespace {

constexpr char kMagic[4] = {'T', 'G', 'X', '1'};

struct Header {
    unsigned arity = 4;
    TimeModel model = TimeModel::interval;
    std::uint64_t n = 0;
    std::uint32_t vertices = 0;
    std::uint32_t lifetime = 0;
    std::uint64_t sigma = 0;
    std::uint8_t codec = 0;
    std::uint16_t t_psi = 0;
};

void put_header(ByteWriter& out, const Header& h) {
    for (char c : kMagic) out.put_u8(static_cast<std::uint8_t>(c));
    out.put_u16(kIndexFormatVersion);
    out.put_u8(static_cast<std::uint8_t>(h.arity));
    out.put_u8(static_cast<std::uint8_t>(h.model));
    out.put_u64(h.n);
    out.put_u32(h.vertices);
    out.put_u32(h.lifetime);
    out.put_u64(h.sigma);
    out.put_u8(h.codec);
    out.put_u8(0);
    out.put_u16(h.t_psi);
    out.put_u32(0);
}

Header get_header(ByteReader& in) {
    char magic[4];
    for (char& c : magic) c = static_cast<char>(in.get_u8());
    if (std::memcmp(magic, kMagic, 4) != 0) throw FormatError("not an index file (bad magic)");
    if (std::uint16_t v = in.get_u16(); v != kIndexFormatVersion) {
        throw FormatError("unsupported index format version " + std::to_string(v));
    }
    Header h;
    h.arity = in.get_u8();
    std::uint8_t model = in.get_u8();
    h.n = in.get_u64();
    h.vertices = in.get_u32();
    h.lifetime = in.get_u32();
    h.sigma = in.get_u64();
    h.codec = in.get_u8();
    in.get_u8();
    h.t_psi = in.get_u16();
    in.get_u32();
    if (h.arity != 3 && h.arity != 4) throw FormatError("bad arity in header");
    if (model > static_cast<std::uint8_t>(TimeModel::point)) throw FormatError("bad time model in header");
    h.model = static_cast<TimeModel>(model);
    if ((h.arity == 4) != (h.model == TimeModel::interval)) throw FormatError("arity and time model disagree");
    return h;
}

}  // namespace

std::vector<std::uint8_t> serialize_index(const TgcsaIndex& idx) {
    Header h;
    h.arity = idx.arity();
    h.model = idx.model();
    h.n = idx.contacts();
    h.vertices = idx.alphabet().vertices();
    h.lifetime = idx.alphabet().lifetime();
    h.sigma = idx.sigma();
    h.codec = static_cast<std::uint8_t>(idx.codec().kind());
    h.t_psi = static_cast<std::uint16_t>(idx.codec().sample_period());

    ByteWriter out;
    put_header(out, h);
    ByteWriter b;
    idx.alphabet().serialize(b);
    out.put_section(b);
    ByteWriter d;
    idx.d().serialize(d);
    out.put_section(d);
    ByteWriter psi;
    idx.codec().serialize(psi);
    out.put_section(psi);
    return out.take();
}

TgcsaIndex deserialize_index(std::span<const std::uint8_t> bytes) {
    ByteReader in(bytes);
    Header h = get_header(in);
    if (h.codec > static_cast<std::uint8_t>(PsiCodecKind::huff_rle_opt)) {
        throw FormatError("codec tag " + std::to_string(h.codec) + " is not a self-index");
    }
    auto b_sec = in.get_section();
    AlphabetMap am = AlphabetMap::deserialize(b_sec);
    b_sec.expect_end("alphabet section");
    if (am.arity() != h.arity || am.vertices() != h.vertices || am.lifetime() != h.lifetime || am.sigma() != h.sigma) {
        throw FormatError("alphabet section disagrees with header");
    }
    auto d_sec = in.get_section();
    BitSequence d = BitSequence::deserialize(d_sec);
    d_sec.expect_end("D section");
    PsiShape shape{h.n, h.arity};
    auto psi_sec = in.get_section();
    auto codec = deserialize_psi(psi_sec, static_cast<PsiCodecKind>(h.codec), shape, h.t_psi);
    psi_sec.expect_end("psi section");
    in.expect_end("index file");
    try {
        return TgcsaIndex(std::move(am), std::move(d), std::move(codec), h.n, h.model);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

std::vector<std::uint8_t> serialize_edgelog(const EdgeLogIndex& el) {
    Header h;
    h.n = el.contacts();
    h.vertices = el.vertices();
    h.lifetime = el.lifetime();
    h.codec = EdgeLogIndex::kCodecTag;
    ByteWriter out;
    put_header(out, h);
    ByteWriter payload;
    el.serialize(payload);
    out.put_section(payload);
    return out.take();
}

EdgeLogIndex deserialize_edgelog(std::span<const std::uint8_t> bytes) {
    ByteReader in(bytes);
    Header h = get_header(in);
    if (h.codec != EdgeLogIndex::kCodecTag) throw FormatError("not an edgelog file");
    auto sec = in.get_section();
    EdgeLogIndex el = EdgeLogIndex::deserialize(sec);
    sec.expect_end("edgelog section");
    in.expect_end("edgelog file");
    if (el.contacts() != h.n || el.vertices() != h.vertices || el.lifetime() != h.lifetime) {
        throw FormatError("edgelog payload disagrees with header");
    }
    return el;
}

std::unique_ptr<QueryEngine> load_engine(std::span<const std::uint8_t> bytes) {
    ByteReader in(bytes);
    Header h = get_header(in);
    if (h.codec == EdgeLogIndex::kCodecTag) return std::make_unique<EdgeLogIndex>(deserialize_edgelog(bytes));
    return std::make_unique<TgcsaEngine>(deserialize_index(bytes));
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace tgcsa
