#include "dpdp/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dpdp {

namespace {

// raw engine draws only: deterministic across standard library implementations
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

}  // namespace

InstanceFile gen_glws(Index n, const std::string& distribution, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_glws: n must be non-negative");
  if (distribution != "uniform") {
    throw std::invalid_argument("gen_glws: unknown distribution '" + distribution + "'");
  }
  std::mt19937_64 rng(seed);
  std::vector<double> xs(static_cast<std::size_t>(n));
  const std::uint64_t span = static_cast<std::uint64_t>(std::max<Index>(n, 1)) * 8;
  for (auto& x : xs) x = static_cast<double>(draw(rng, span));
  std::sort(xs.begin(), xs.end());
  // strictly increasing, still integral
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] += static_cast<double>(i);
  return InstanceFile::coordinates(std::move(xs));
}

InstanceFile gen_sequence(Index n, int alphabet, std::uint64_t seed) {
  if (n < 0 || alphabet < 1 || alphabet > 255) {
    throw std::invalid_argument("gen_sequence: need n >= 0 and alphabet in [1, 255]");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bs(static_cast<std::size_t>(n));
  for (auto& b : bs) b = static_cast<std::uint8_t>(1 + draw(rng, static_cast<std::uint64_t>(alphabet)));
  return InstanceFile::byte_sequence(std::move(bs));
}

std::pair<InstanceFile, InstanceFile> gen_lcs(Index n, Index m, int alphabet, std::uint64_t seed) {
  return {gen_sequence(n, alphabet, seed), gen_sequence(m, alphabet, seed ^ 0x5deece66dULL)};
}

InstanceFile gen_lis(Index n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_lis: n must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> perm(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i + 1);
  for (Index i = n - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(i + 1)))]);
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    pairs[static_cast<std::size_t>(i)] = {static_cast<std::uint64_t>(i + 1), perm[static_cast<std::size_t>(i)]};
  }
  return InstanceFile::match_pairs(std::move(pairs));
}

InstanceFile gen_match_list(Index l, Index j_range, std::uint64_t seed) {
  if (l < 0 || j_range < 1) throw std::invalid_argument("gen_match_list: need l >= 0, j_range >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs(static_cast<std::size_t>(l));
  for (Index t = 0; t < l; ++t) {
    pairs[static_cast<std::size_t>(t)] = {static_cast<std::uint64_t>(t + 1),
                                          1 + draw(rng, static_cast<std::uint64_t>(j_range))};
  }
  return InstanceFile::match_pairs(std::move(pairs));
}

}  // namespace dpdp
