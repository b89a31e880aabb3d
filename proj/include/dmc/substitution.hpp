#pragma once

#include <cstdint>
#include <vector>

#include "dmc/dna_codec.hpp"
#include "dmc/random.hpp"
#include "dmc/reference_key.hpp"

namespace dmc {

/// Row-major grid of key positions. Valid pointers are < kWindowStarts;
/// the wider storage type lets corrupt values be represented and rejected.
struct PointerGrid {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint32_t> pointers;

  friend bool operator==(const PointerGrid&, const PointerGrid&) = default;
};

/// Replaces each quad, in row-major order, by one of its occurrence
/// positions in the key, chosen uniformly with exactly one draw per cell.
PointerGrid substitute(const DnaImage& dna, const ReferenceKey& key, RandomStream& rng);

/// Reads the quad at each pointer back out of the key sequence.
/// Throws PointerOutOfRangeError for any pointer >= kWindowStarts.
DnaImage reverse_substitute(const PointerGrid& grid, const ReferenceKey& key);

}  // namespace dmc
