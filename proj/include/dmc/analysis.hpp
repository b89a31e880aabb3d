#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dmc/cipher.hpp"
#include "dmc/random.hpp"

namespace dmc {

struct Histogram {
  std::array<std::uint64_t, 256> bins{};
  std::uint64_t total = 0;
};

Histogram histogram(std::span<const std::uint8_t> values);

/// Ciphertext binning: each pointer contributes its high byte.
Histogram pointer_histogram(std::span<const std::uint32_t> pointers);

/// Pearson chi-square statistic of the bins against a uniform expectation.
double chi_square_uniform(const Histogram& h);

/// r = (n*Sxy - Sx*Sy) / (sqrt(n*Sxx - Sx^2) * sqrt(n*Syy - Sy^2)).
/// Throws LengthMismatch for unequal lengths and ZeroVariance when either
/// series is constant (or has fewer than two samples).
double pearson(std::span<const double> x, std::span<const double> y);

enum class Direction { Horizontal, Vertical, Diagonal };

std::string_view to_string(Direction d) noexcept;
inline constexpr std::array<Direction, 3> kAllDirections = {Direction::Horizontal, Direction::Vertical,
                                                            Direction::Diagonal};

struct CorrelationReport {
  Direction direction = Direction::Horizontal;
  std::size_t sample_count = 0;
  double r = 0.0;
};

inline constexpr std::size_t kDefaultCorrelationSamples = 4096;

/// Samples `sample_n` cells uniformly with replacement among those that
/// have a right / lower / lower-right neighbour, and correlates each cell
/// with that neighbour.
CorrelationReport adjacent_correlation(std::span<const double> cells, std::uint32_t width, std::uint32_t height,
                                       Direction direction, std::size_t sample_n, RandomStream& rng);

template <typename T>
std::vector<double> as_samples(std::span<const T> values) {
  return std::vector<double>(values.begin(), values.end());
}

/// Known-plaintext XOR replay: M = plain ^ known_cipher, candidate =
/// M ^ target_cipher, with plaintext bytes zero-extended to 16-bit cells.
/// Returns the low byte of each candidate cell.
std::vector<std::uint8_t> chosen_plaintext_attack(std::span<const std::uint8_t> known_plain,
                                                  std::span<const std::uint16_t> known_cipher,
                                                  std::span<const std::uint16_t> target_cipher);

struct AttackReport {
  std::vector<std::uint8_t> recovered;
  double match_fraction = 0.0;
  bool success = false;
};

AttackReport evaluate_attack(std::span<const std::uint8_t> candidate, std::span<const std::uint8_t> truth);

/// Mean fraction of ciphertext cells that change when one random pixel is
/// incremented (mod 256). Each trial encrypts the original and the
/// modified image with independent streams seeded from `rng`.
double differential_sensitivity(const PlainImage& image, const ReferenceKey& key, std::size_t trials,
                                RandomStream& rng);

/// Same experiment but both encryptions share one seed per trial, so the
/// draw sequences line up cell for cell.
double paired_seed_sensitivity(const PlainImage& image, const ReferenceKey& key, std::size_t trials,
                               RandomStream& rng);

/// Fraction of positions at which two equal-length pointer grids differ.
double change_rate(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

}  // namespace dmc
