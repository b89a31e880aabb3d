#include "dmc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "dmc/error.hpp"

namespace dmc {

Histogram histogram(std::span<const std::uint8_t> values) {
  Histogram h;
  for (auto v : values) ++h.bins[v];
  h.total = values.size();
  return h;
}

Histogram pointer_histogram(std::span<const std::uint32_t> pointers) {
  Histogram h;
  for (auto p : pointers) ++h.bins[(p >> 8) & 0xFF];
  h.total = pointers.size();
  return h;
}

double chi_square_uniform(const Histogram& h) {
  if (h.total == 0) throw Error(ErrorCode::InvalidArgument, "empty histogram");
  const double expected = static_cast<double>(h.total) / h.bins.size();
  double chi = 0.0;
  for (auto count : h.bins) {
    const double d = static_cast<double>(count) - expected;
    chi += d * d / expected;
  }
  return chi;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "series lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  if (x.size() < 2) throw Error(ErrorCode::ZeroVariance, "need at least two samples");

  // The statistic is translation invariant; centring first keeps n*Sxx and
  // Sx^2 from cancelling catastrophically on 16-bit pointer data.
  using wide = long double;
  const wide n = static_cast<wide>(x.size());
  const wide mx = std::accumulate(x.begin(), x.end(), wide{0}) / n;
  const wide my = std::accumulate(y.begin(), y.end(), wide{0}) / n;

  wide sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const wide a = x[i] - mx;
    const wide b = y[i] - my;
    sx += a;
    sy += b;
    sxx += a * a;
    syy += b * b;
    sxy += a * b;
  }
  const wide var_x = n * sxx - sx * sx;
  const wide var_y = n * syy - sy * sy;
  if (!(var_x > 0) || !(var_y > 0)) throw Error(ErrorCode::ZeroVariance, "a series is constant");
  const wide r = (n * sxy - sx * sy) / (std::sqrt(var_x) * std::sqrt(var_y));
  return static_cast<double>(std::clamp(r, wide{-1}, wide{1}));
}

std::string_view to_string(Direction d) noexcept {
  switch (d) {
    case Direction::Horizontal: return "horizontal";
    case Direction::Vertical: return "vertical";
    case Direction::Diagonal: return "diagonal";
  }
  return "unknown";
}

CorrelationReport adjacent_correlation(std::span<const double> cells, std::uint32_t width, std::uint32_t height,
                                       Direction direction, std::size_t sample_n, RandomStream& rng) {
  if (cells.size() != std::size_t{width} * height) {
    throw Error(ErrorCode::LengthMismatch, "cell count does not match dimensions");
  }
  if (sample_n < 2) throw Error(ErrorCode::InvalidArgument, "sample_n must be at least 2");

  const std::uint32_t dx = direction == Direction::Vertical ? 0 : 1;
  const std::uint32_t dy = direction == Direction::Horizontal ? 0 : 1;
  if (width <= dx || height <= dy) {
    throw Error(ErrorCode::DimensionError, std::to_string(width) + "x" + std::to_string(height) +
                                               " image has no " + std::string(to_string(direction)) +
                                               " neighbour pairs");
  }
  const std::uint64_t span_x = width - dx;
  const std::uint64_t span_y = height - dy;

  std::vector<double> xs(sample_n), ys(sample_n);
  for (std::size_t i = 0; i < sample_n; ++i) {
    const auto pick = rng.uniform_below(span_x * span_y);
    const auto cx = pick % span_x;
    const auto cy = pick / span_x;
    xs[i] = cells[cy * width + cx];
    ys[i] = cells[(cy + dy) * width + cx + dx];
  }
  return {direction, sample_n, pearson(xs, ys)};
}

std::vector<std::uint8_t> chosen_plaintext_attack(std::span<const std::uint8_t> known_plain,
                                                  std::span<const std::uint16_t> known_cipher,
                                                  std::span<const std::uint16_t> target_cipher) {
  if (known_plain.size() != known_cipher.size() || known_cipher.size() != target_cipher.size()) {
    throw Error(ErrorCode::LengthMismatch, "attack streams differ in length");
  }
  std::vector<std::uint8_t> candidate(known_plain.size());
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const std::uint16_t keystream = static_cast<std::uint16_t>(known_plain[i]) ^ known_cipher[i];
    candidate[i] = static_cast<std::uint8_t>((keystream ^ target_cipher[i]) & 0xFF);
  }
  return candidate;
}

AttackReport evaluate_attack(std::span<const std::uint8_t> candidate, std::span<const std::uint8_t> truth) {
  if (candidate.size() != truth.size()) throw Error(ErrorCode::LengthMismatch, "candidate and truth differ in length");
  AttackReport report;
  report.recovered.assign(candidate.begin(), candidate.end());
  std::size_t matches = 0;
  for (std::size_t i = 0; i < candidate.size(); ++i) matches += candidate[i] == truth[i];
  report.match_fraction = candidate.empty() ? 1.0 : static_cast<double>(matches) / candidate.size();
  report.success = matches == candidate.size();
  return report;
}

double change_rate(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "grids differ in length");
  if (a.empty()) return 0.0;
  std::size_t changed = 0;
  for (std::size_t i = 0; i < a.size(); ++i) changed += a[i] != b[i];
  return static_cast<double>(changed) / a.size();
}

namespace {

template <typename SeedPair>
double sensitivity_trials(const PlainImage& image, const ReferenceKey& key, std::size_t trials, RandomStream& rng,
                          SeedPair seeds) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (image.pixels.empty()) throw Error(ErrorCode::InvalidArgument, "empty image");
  double total = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    PlainImage modified = image;
    const auto where = rng.uniform_below(modified.pixels.size());
    modified.pixels[where] = static_cast<std::uint8_t>(modified.pixels[where] + 1);

    const auto [seed_a, seed_b] = seeds(rng);
    RandomStream stream_a(seed_a);
    RandomStream stream_b(seed_b);
    const auto original = encrypt(image, key, stream_a);
    const auto changed = encrypt(modified, key, stream_b);
    total += change_rate(original.pointers, changed.pointers);
  }
  return total / static_cast<double>(trials);
}

}  // namespace

double differential_sensitivity(const PlainImage& image, const ReferenceKey& key, std::size_t trials,
                                RandomStream& rng) {
  return sensitivity_trials(image, key, trials, rng, [](RandomStream& r) {
    const auto a = r.next_u64();
    return std::pair{a, r.next_u64()};
  });
}

double paired_seed_sensitivity(const PlainImage& image, const ReferenceKey& key, std::size_t trials,
                               RandomStream& rng) {
  return sensitivity_trials(image, key, trials, rng, [](RandomStream& r) {
    const auto a = r.next_u64();
    return std::pair{a, a};
  });
}

}  // namespace dmc
