#include "smece/random.hpp"

#include <string>

#include "smece/errors.hpp"

namespace smece {

std::uint64_t derive_replication_seed(std::uint64_t master_seed, std::uint64_t k_index,
                                      std::uint64_t n_index, std::uint64_t replication) {
  if (k_index > kMaxKIndex || n_index > kMaxNIndex || replication > kMaxReplication) {
    throw DomainError("replication index out of range (k " + std::to_string(k_index) +
                      ", n " + std::to_string(n_index) + ", rep " +
                      std::to_string(replication) + ")");
  }
  const std::uint64_t packed = (k_index << 52) | (n_index << 40) | replication;
  return mix64(mix64(master_seed) + packed * 0x9E3779B97F4A7C15ULL);
}

}  // namespace smece
