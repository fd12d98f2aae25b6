#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "dpdp/instance_io.hpp"
#include "dpdp/types.hpp"

namespace dpdp {

// Seeded instance generators. All randomness flows from the given seed and
// the output is byte-deterministic for fixed arguments.

// Sorted integral coordinates (stored as f64) for GLWS / post-office runs.
// distribution: "uniform". Unknown names raise std::invalid_argument.
InstanceFile gen_glws(Index n, const std::string& distribution, std::uint64_t seed);

// Random byte string over the first `alphabet` symbols (1..255).
InstanceFile gen_sequence(Index n, int alphabet, std::uint64_t seed);

// Two sequences for LCS/GAP runs; alphabet controls the match count L.
std::pair<InstanceFile, InstanceFile> gen_lcs(Index n, Index m, int alphabet, std::uint64_t seed);

// Random permutation of 1..n as match pairs (i, pi(i)): an LIS instance.
InstanceFile gen_lis(Index n, std::uint64_t seed);

// Match list with L pairs whose j components range over [1, j_range]:
// the strict LIS of the j sequence (= the LCS length) is at most j_range.
InstanceFile gen_match_list(Index l, Index j_range, std::uint64_t seed);

}  // namespace dpdp
