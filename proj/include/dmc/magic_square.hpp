#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dmc/error.hpp"

namespace dmc {

/// Line sum of any order-n magic square: n(n^2+1)/2.
constexpr std::uint64_t magic_constant(std::uint64_t n) noexcept { return n * (n * n + 1) / 2; }

class MagicSquare {
 public:
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t at(std::uint32_t row, std::uint32_t col) const noexcept {
    return cells_[std::size_t{row} * order_ + col];
  }
  /// Row-major cell values, a permutation of 1..n^2.
  std::span<const std::uint32_t> cells() const noexcept { return cells_; }

  /// Rows separated by newlines, cells right-aligned.
  std::string to_string() const;

 private:
  friend MagicSquare generate_doubly_even(std::uint32_t n);
  MagicSquare(std::uint32_t order, std::vector<std::uint32_t> cells) : order_(order), cells_(std::move(cells)) {}

  std::uint32_t order_;
  std::vector<std::uint32_t> cells_;
};

/// Fills 1..n^2 row-major, then complements (v -> n^2+1-v) every cell on
/// the diagonals of each 4x4 block. Throws NotDoublyEven unless n >= 4
/// and n % 4 == 0.
MagicSquare generate_doubly_even(std::uint32_t n);

/// Bijection on [0, size). forward[k] is where source index k lands.
class Permutation {
 public:
  static Permutation identity(std::size_t size);
  /// Throws InvalidArgument when `forward` is not a bijection on its index range.
  static Permutation from_forward(std::vector<std::uint32_t> forward);

  std::size_t size() const noexcept { return forward_.size(); }
  std::uint32_t forward(std::size_t k) const noexcept { return forward_[k]; }
  std::uint32_t backward(std::size_t k) const noexcept { return backward_[k]; }

 private:
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> backward_;
};

/// Cell value v at linear index r*n+c sends source index r*n+c to v-1.
Permutation to_permutation(const MagicSquare& square);

/// output[perm.forward(k)] = input[k].
template <typename T>
std::vector<T> scramble(std::span<const T> input, const Permutation& perm) {
  if (input.size() != perm.size()) {
    throw Error(ErrorCode::LengthMismatch, "grid has " + std::to_string(input.size()) +
                                               " cells, permutation has " + std::to_string(perm.size()));
  }
  std::vector<T> out(input.size());
  for (std::size_t k = 0; k < input.size(); ++k) out[perm.forward(k)] = input[k];
  return out;
}

/// output[k] = input[perm.forward(k)]; inverse of scramble.
template <typename T>
std::vector<T> unscramble(std::span<const T> input, const Permutation& perm) {
  if (input.size() != perm.size()) {
    throw Error(ErrorCode::LengthMismatch, "grid has " + std::to_string(input.size()) +
                                               " cells, permutation has " + std::to_string(perm.size()));
  }
  std::vector<T> out(input.size());
  for (std::size_t k = 0; k < input.size(); ++k) out[k] = input[perm.forward(k)];
  return out;
}

}  // namespace dmc
