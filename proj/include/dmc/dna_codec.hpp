#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmc/imageio.hpp"

namespace dmc {

/// The enumerator value is the nucleotide's 2-bit digital code.
enum class Nucleotide : std::uint8_t { C = 0b00, T = 0b01, A = 0b10, G = 0b11 };

char to_char(Nucleotide n) noexcept;

/// Accepts upper- or lower-case A/C/G/T.
std::optional<Nucleotide> nucleotide_from_char(char c) noexcept;

/// Four nucleotides; element 0 carries the most significant bit-pair.
struct Quad {
  std::array<Nucleotide, 4> bases{};

  friend bool operator==(const Quad&, const Quad&) = default;
};

std::string to_string(const Quad& q);

/// Parses a 4-character A/C/G/T string.
std::optional<Quad> quad_from_string(std::string_view text) noexcept;

constexpr Quad encode_pixel(std::uint8_t value) noexcept {
  Quad q;
  for (int i = 0; i < 4; ++i) q.bases[i] = static_cast<Nucleotide>((value >> (6 - 2 * i)) & 0b11);
  return q;
}

constexpr std::uint8_t decode_quad(const Quad& q) noexcept {
  unsigned value = 0;
  for (auto n : q.bases) value = (value << 2) | static_cast<unsigned>(n);
  return static_cast<std::uint8_t>(value);
}

struct DnaImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<Quad> quads;

  friend bool operator==(const DnaImage&, const DnaImage&) = default;
};

DnaImage synthesize(const PlainImage& image);
PlainImage resynthesize(const DnaImage& dna);

}  // namespace dmc
