#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dmc {

/// 8-bit grayscale raster, row-major.
struct PlainImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(std::uint32_t x, std::uint32_t y) const { return pixels[std::size_t{y} * width + x]; }

  friend bool operator==(const PlainImage&, const PlainImage&) = default;
};

/// Parses a P5 (binary) or P2 (ASCII) PGM with maxval 255. Header
/// comments are allowed anywhere whitespace is. Bytes past the raster
/// are ignored.
PlainImage read_pgm(std::span<const std::uint8_t> bytes);

/// Canonical form: "P5\n<w> <h>\n255\n" followed by the raw raster.
std::vector<std::uint8_t> write_pgm(const PlainImage& image);

}  // namespace dmc
