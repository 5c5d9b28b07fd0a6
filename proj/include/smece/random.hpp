#pragma once

#include <cstdint>
#include <random>

namespace smece {

/// Per-task generator. mt19937_64's output sequence is fixed by the
/// standard, so runs reproduce across toolchains.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// splitmix64 output function; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kMaxKIndex = (1ULL << 12) - 1;
inline constexpr std::uint64_t kMaxNIndex = (1ULL << 12) - 1;
inline constexpr std::uint64_t kMaxReplication = (1ULL << 40) - 1;

/// Seed for one (k, n, replication) cell of an experiment.
///
/// The indices are packed into 12/12/40 bits, multiplied by an odd constant,
/// offset by the mixed master seed and mixed again. Every step is a
/// bijection mod 2^64, so for a fixed master seed distinct index triples map
/// to distinct seeds. The result depends only on its arguments, never on
/// scheduling. Throws DomainError for indices outside the packed ranges.
std::uint64_t derive_replication_seed(std::uint64_t master_seed, std::uint64_t k_index,
                                      std::uint64_t n_index, std::uint64_t replication);

}  // namespace smece
