#pragma once
// On-disk container shared by the self-index and the EdgeLog baseline.
//
// Header (little-endian): "TGX1", u16 version, u8 arity, u8 time model,
// u64 n, u32 ν, u32 τ, u64 σ, u8 codec tag, u8 reserved, u16 t_psi, u32
// reserved. Then 8-aligned length-prefixed sections: alphabet (B), D, and the
// Ψ payload; an EdgeLog file (tag 16) has a single payload section instead.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tgcsa/baseline.hpp"
#include "tgcsa/engine.hpp"
#include "tgcsa/sacsa.hpp"

namespace tgcsa {

inline constexpr std::uint16_t kIndexFormatVersion = 1;

std::vector<std::uint8_t> serialize_index(const TgcsaIndex& idx);
TgcsaIndex deserialize_index(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> serialize_edgelog(const EdgeLogIndex& el);
EdgeLogIndex deserialize_edgelog(std::span<const std::uint8_t> bytes);

// Either kind of file, by codec tag.
std::unique_ptr<QueryEngine> load_engine(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace tgcsa
