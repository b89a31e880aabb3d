#pragma once

// Fixtures shared by the unit and acceptance suites. Randomness here comes
// from its own std::mt19937_64 instances, never from dmc::RandomStream, so
// test data stays independent of the generator under test.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dmc/imageio.hpp"
#include "dmc/reference_key.hpp"

namespace dmc::testing {

inline NucleotideSequence random_sequence(std::uint64_t seed, std::size_t length = kMinKeyLength) {
  std::mt19937_64 gen(seed);
  NucleotideSequence seq;
  seq.source_name = "random-" + std::to_string(seed);
  seq.bases.resize(length);
  for (auto& b : seq.bases) b = static_cast<Nucleotide>(gen() & 0b11);
  return seq;
}

inline ReferenceKey random_key(std::uint64_t seed) { return build_key(random_sequence(seed)); }

inline std::string fasta_of(const NucleotideSequence& seq, std::size_t line = 70) {
  std::string text = ">" + seq.source_name + "\n";
  const auto symbols = seq.to_string();
  for (std::size_t i = 0; i < symbols.size(); i += line) text += symbols.substr(i, line) + "\n";
  return text;
}

inline PlainImage random_image(std::uint32_t width, std::uint32_t height, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  PlainImage img{width, height, std::vector<std::uint8_t>(std::size_t{width} * height)};
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(gen());
  return img;
}

inline PlainImage constant_image(std::uint32_t side, std::uint8_t value) {
  return PlainImage{side, side, std::vector<std::uint8_t>(std::size_t{side} * side, value)};
}

/// pixel = column index mod 256
inline PlainImage horizontal_gradient(std::uint32_t side) {
  PlainImage img{side, side, std::vector<std::uint8_t>(std::size_t{side} * side)};
  for (std::uint32_t y = 0; y < side; ++y)
    for (std::uint32_t x = 0; x < side; ++x) img.pixels[std::size_t{y} * side + x] = static_cast<std::uint8_t>(x);
  return img;
}

}  // namespace dmc::testing
