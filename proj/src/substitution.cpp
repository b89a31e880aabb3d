#include "dmc/substitution.hpp"

#include "dmc/error.hpp"

namespace dmc {

PointerGrid substitute(const DnaImage& dna, const ReferenceKey& key, RandomStream& rng) {
  PointerGrid grid{dna.width, dna.height, {}};
  grid.pointers.reserve(dna.quads.size());
  for (const auto& quad : dna.quads) {
    const auto value = decode_quad(quad);
    const auto positions = key.index().occurrences(value);
    if (positions.empty()) {
      throw Error(ErrorCode::QuadNotCovered, "quad " + to_string(quad) + " does not occur in the key window");
    }
    grid.pointers.push_back(positions[rng.uniform_below(positions.size())]);
  }
  return grid;
}

DnaImage reverse_substitute(const PointerGrid& grid, const ReferenceKey& key) {
  DnaImage dna{grid.width, grid.height, {}};
  dna.quads.reserve(grid.pointers.size());
  for (std::size_t i = 0; i < grid.pointers.size(); ++i) {
    const auto p = grid.pointers[i];
    if (p >= kWindowStarts) throw PointerOutOfRangeError(i, p);
    dna.quads.push_back(encode_pixel(key.quad_at(p)));
  }
  return dna;
}

}  // namespace dmc
