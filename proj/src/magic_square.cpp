#include "dmc/magic_square.hpp"

#include <numeric>

namespace dmc {

MagicSquare generate_doubly_even(std::uint32_t n) {
  if (n < 4 || n % 4 != 0) {
    throw Error(ErrorCode::NotDoublyEven, "order " + std::to_string(n) + " is not a positive multiple of 4");
  }
  const std::uint32_t cells = n * n;
  std::vector<std::uint32_t> grid(cells);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint32_t v = i * n + j + 1;
      const std::uint32_t bi = i % 4;
      const std::uint32_t bj = j % 4;
      // Both diagonals of the 4x4 block.
      const bool on_diagonal = bi == bj || bi + bj == 3;
      grid[i * n + j] = on_diagonal ? cells + 1 - v : v;
    }
  }
  return MagicSquare(n, std::move(grid));
}

std::string MagicSquare::to_string() const {
  const auto width = std::to_string(std::size_t{order_} * order_).size();
  std::string out;
  for (std::uint32_t r = 0; r < order_; ++r) {
    for (std::uint32_t c = 0; c < order_; ++c) {
      auto cell = std::to_string(at(r, c));
      if (c > 0) out += ' ';
      out.append(width - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::uint32_t> forward(size);
  std::iota(forward.begin(), forward.end(), 0u);
  return from_forward(std::move(forward));
}

Permutation Permutation::from_forward(std::vector<std::uint32_t> forward) {
  constexpr std::uint32_t unset = ~0u;
  std::vector<std::uint32_t> backward(forward.size(), unset);
  for (std::size_t k = 0; k < forward.size(); ++k) {
    const auto dest = forward[k];
    if (dest >= forward.size() || backward[dest] != unset) {
      throw Error(ErrorCode::InvalidArgument, "mapping is not a bijection at index " + std::to_string(k));
    }
    backward[dest] = static_cast<std::uint32_t>(k);
  }
  Permutation p;
  p.forward_ = std::move(forward);
  p.backward_ = std::move(backward);
  return p;
}

Permutation to_permutation(const MagicSquare& square) {
  auto cells = square.cells();
  std::vector<std::uint32_t> forward(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) forward[k] = cells[k] - 1;
  return Permutation::from_forward(std::move(forward));
}

}  // namespace dmc
