#include "dpdp/instance_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace dpdp {

namespace {

constexpr char kMagic[4] = {'D', 'P', 'D', 'P'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v));
}

struct Reader {
  std::span<const std::uint8_t> data;
  std::size_t pos = 0;

  void need(std::size_t bytes) const {
    if (pos + bytes > data.size()) throw std::invalid_argument("instance file: truncated");
  }
  std::uint8_t u8() {
    need(1);
    return data[pos++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(data[pos++]) << (8 * b);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(data[pos++]) << (8 * b);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
};

void check_sorted(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1] < xs[i])) {
      throw std::invalid_argument("instance file: coordinates must be sorted ascending");
    }
  }
}

}  // namespace

Index InstanceFile::count() const {
  switch (kind) {
    case PayloadKind::Coordinates:
      return static_cast<Index>(coords.size());
    case PayloadKind::ByteSequence:
      return static_cast<Index>(bytes.size());
    case PayloadKind::MatchListPairs:
      return static_cast<Index>(pairs.size());
  }
  return 0;
}

InstanceFile InstanceFile::coordinates(std::vector<double> xs) {
  check_sorted(xs);
  InstanceFile f;
  f.kind = PayloadKind::Coordinates;
  f.coords = std::move(xs);
  return f;
}

InstanceFile InstanceFile::byte_sequence(std::vector<std::uint8_t> bs) {
  InstanceFile f;
  f.kind = PayloadKind::ByteSequence;
  f.bytes = std::move(bs);
  return f;
}

InstanceFile InstanceFile::match_pairs(std::vector<std::pair<std::uint64_t, std::uint64_t>> ps) {
  InstanceFile f;
  f.kind = PayloadKind::MatchListPairs;
  f.pairs = std::move(ps);
  return f;
}

std::vector<std::uint8_t> encode_instance(const InstanceFile& file) {
  std::vector<std::uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, file.version);
  out.push_back(static_cast<std::uint8_t>(file.kind));
  put_u64(out, static_cast<std::uint64_t>(file.count()));
  switch (file.kind) {
    case PayloadKind::Coordinates:
      check_sorted(file.coords);
      for (double x : file.coords) put_f64(out, x);
      break;
    case PayloadKind::ByteSequence:
      out.insert(out.end(), file.bytes.begin(), file.bytes.end());
      break;
    case PayloadKind::MatchListPairs:
      for (const auto& [a, b] : file.pairs) {
        put_u64(out, a);
        put_u64(out, b);
      }
      break;
  }
  return out;
}

InstanceFile decode_instance(std::span<const std::uint8_t> data) {
  Reader r{data};
  r.need(4);
  if (std::memcmp(data.data(), kMagic, 4) != 0) {
    throw std::invalid_argument("instance file: bad magic");
  }
  r.pos = 4;
  InstanceFile f;
  f.version = r.u32();
  if (f.version != 1) throw std::invalid_argument("instance file: unsupported version");
  const auto kind = r.u8();
  const auto count = r.u64();
  switch (kind) {
    case 1: {
      f.kind = PayloadKind::Coordinates;
      f.coords.reserve(count);
      for (std::uint64_t i = 0; i < count; ++i) f.coords.push_back(r.f64());
      check_sorted(f.coords);
      break;
    }
    case 2: {
      f.kind = PayloadKind::ByteSequence;
      r.need(count);
      f.bytes.assign(data.begin() + static_cast<std::ptrdiff_t>(r.pos),
                     data.begin() + static_cast<std::ptrdiff_t>(r.pos + count));
      r.pos += count;
      break;
    }
    case 3: {
      f.kind = PayloadKind::MatchListPairs;
      f.pairs.reserve(count);
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto a = r.u64();
        const auto b = r.u64();
        f.pairs.emplace_back(a, b);
      }
      break;
    }
    default:
      throw std::invalid_argument("instance file: unknown payload kind");
  }
  if (r.pos != data.size()) throw std::invalid_argument("instance file: trailing bytes");
  return f;
}

void write_instance(const std::filesystem::path& path, const InstanceFile& file) {
  const auto data = encode_instance(file);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

InstanceFile read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_instance(data);
}

}  // namespace dpdp
