#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "dpdp/types.hpp"

namespace dpdp {

// Binary instance container. Layout, all little-endian:
//   magic "DPDP" | version u32 | payload kind u8 | element count u64 | payload
// Payloads: 1 = f64 coordinate array (sorted ascending), 2 = raw byte
// sequence, 3 = (u64, u64) match pairs. Round-trips bit-exactly.
enum class PayloadKind : std::uint8_t {
  Coordinates = 1,
  ByteSequence = 2,
  MatchListPairs = 3,
};

struct InstanceFile {
  std::uint32_t version = 1;
  PayloadKind kind = PayloadKind::Coordinates;
  std::vector<double> coords;
  std::vector<std::uint8_t> bytes;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

  Index count() const;

  static InstanceFile coordinates(std::vector<double> xs);
  static InstanceFile byte_sequence(std::vector<std::uint8_t> bs);
  static InstanceFile match_pairs(std::vector<std::pair<std::uint64_t, std::uint64_t>> ps);
};

void write_instance(const std::filesystem::path& path, const InstanceFile& file);
InstanceFile read_instance(const std::filesystem::path& path);

std::vector<std::uint8_t> encode_instance(const InstanceFile& file);
InstanceFile decode_instance(std::span<const std::uint8_t> data);

}  // namespace dpdp
