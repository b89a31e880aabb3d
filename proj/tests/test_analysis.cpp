#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "dmc/analysis.hpp"
#include "dmc/error.hpp"
#include "support.hpp"

using namespace dmc;

namespace {

const ReferenceKey& shared_key() {
  static const ReferenceKey key = testing::random_key(31415);
  return key;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

std::vector<std::uint16_t> narrow(const std::vector<std::uint32_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("histogram counts") {
  const auto zero = testing::constant_image(4, 0);
  const auto h = histogram(zero.pixels);
  CHECK(h.bins[0] == 16);
  CHECK(h.total == 16);
  CHECK(std::accumulate(h.bins.begin() + 1, h.bins.end(), std::uint64_t{0}) == 0);

  const auto img = testing::random_image(37, 11, 2);
  const auto r = histogram(img.pixels);
  CHECK(r.total == img.pixels.size());
  CHECK(std::accumulate(r.bins.begin(), r.bins.end(), std::uint64_t{0}) == r.total);

  const std::vector<std::uint32_t> ptrs{0x0000, 0x00FF, 0x0100, 0xFFFF};
  const auto p = pointer_histogram(ptrs);
  CHECK(p.bins[0] == 2);
  CHECK(p.bins[1] == 1);
  CHECK(p.bins[255] == 1);
  CHECK(p.total == 4);
}

TEST_CASE("chi-square against uniform") {
  Histogram flat;
  flat.bins.fill(3);
  flat.total = 768;
  CHECK(chi_square_uniform(flat) == doctest::Approx(0.0));
  // All mass in one bin: (N - N/256)^2/(N/256) + 255*(N/256) = 255 N
  const auto spike = histogram(testing::constant_image(16, 9).pixels);
  CHECK(chi_square_uniform(spike) == doctest::Approx(255.0 * 256));
}

TEST_CASE("pearson examples") {
  const std::vector<double> a{1, 2, 3}, b{3, 2, 1};
  CHECK(pearson(a, a) == doctest::Approx(1.0));
  CHECK(pearson(a, b) == doctest::Approx(-1.0));

  // Hand evaluation: (4*29 - 10*10) / (sqrt(4*30 - 100) * sqrt(4*30 - 100)) = 16/20.
  const std::vector<double> x{1, 2, 3, 4}, y{1, 3, 2, 4};
  const double n = 4, sx = 10, sy = 10, sxy = 1 + 6 + 6 + 16, sxx = 30, syy = 30;
  const double oracle = (n * sxy - sx * sy) / (std::sqrt(n * sxx - sx * sx) * std::sqrt(n * syy - sy * sy));
  CHECK(oracle == doctest::Approx(0.8));
  CHECK(pearson(x, y) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("pearson errors") {
  const std::vector<double> c{5, 5, 5}, v{1, 2, 3}, shorter{1, 2};
  CHECK(code_of([&] { pearson(c, v); }) == ErrorCode::ZeroVariance);
  CHECK(code_of([&] { pearson(v, c); }) == ErrorCode::ZeroVariance);
  CHECK(code_of([&] { pearson(v, shorter); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { pearson(std::vector<double>{1}, std::vector<double>{2}); }) == ErrorCode::ZeroVariance);
}

TEST_CASE("pearson symmetry and affine invariance") {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(0, 65535);
  std::uniform_real_distribution<double> scale(0.01, 100);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + gen() % 500;
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = u(gen);
      y[i] = 0.3 * x[i] + u(gen);
    }
    const double r = pearson(x, y);
    CHECK(std::abs(r) <= 1.0 + 1e-12);
    CHECK(std::abs(r - pearson(y, x)) <= 1e-12);
    const double a = scale(gen), b = u(gen) - 30000;
    auto y2 = y;
    for (auto& v : y2) v = a * v + b;
    CHECK(std::abs(pearson(x, y2) - r) <= 1e-9);
  }
}

TEST_CASE("pearson stays accurate on large offsets") {
  // Exactly linear data far from the origin must still give r = 1.
  std::vector<double> x(4096), y(4096);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = 65000.0 + static_cast<double>(i % 500);
    y[i] = x[i] + 17;
  }
  CHECK(pearson(x, y) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("adjacent correlation of a horizontal gradient") {
  const auto img = testing::horizontal_gradient(64);
  RandomStream rng(1);
  const auto samples = as_samples<std::uint8_t>(img.pixels);
  const auto h = adjacent_correlation(samples, 64, 64, Direction::Horizontal, 4096, rng);
  CHECK(h.direction == Direction::Horizontal);
  CHECK(h.sample_count == 4096);
  CHECK(h.r >= 0.99);
  // Vertical neighbours are identical.
  CHECK(adjacent_correlation(samples, 64, 64, Direction::Vertical, 4096, rng).r == doctest::Approx(1.0));
  CHECK(adjacent_correlation(samples, 64, 64, Direction::Diagonal, 4096, rng).r >= 0.99);
}

TEST_CASE("adjacent correlation collapses in the ciphertext") {
  const auto img = testing::horizontal_gradient(64);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RandomStream enc(seed), sample(seed + 50);
    const auto cipher = encrypt(img, shared_key(), enc);
    const auto cells = as_samples<std::uint32_t>(cipher.pointers);
    const auto r = adjacent_correlation(cells, 64, 64, Direction::Horizontal, 4096, sample).r;
    CHECK(std::abs(r) <= 0.1);
  }
}

TEST_CASE("adjacent correlation errors and determinism") {
  const auto flat = as_samples<std::uint8_t>(testing::constant_image(8, 3).pixels);
  RandomStream rng(2);
  CHECK(code_of([&] { adjacent_correlation(flat, 8, 8, Direction::Diagonal, 100, rng); }) ==
        ErrorCode::ZeroVariance);
  const std::vector<double> column{1, 2, 3, 4};
  CHECK(code_of([&] { adjacent_correlation(column, 1, 4, Direction::Horizontal, 10, rng); }) ==
        ErrorCode::DimensionError);
  CHECK(code_of([&] { adjacent_correlation(column, 2, 4, Direction::Horizontal, 10, rng); }) ==
        ErrorCode::LengthMismatch);

  const auto img = as_samples<std::uint8_t>(testing::random_image(16, 16, 4).pixels);
  RandomStream a(9), b(9);
  CHECK(adjacent_correlation(img, 16, 16, Direction::Vertical, 300, a).r ==
        adjacent_correlation(img, 16, 16, Direction::Vertical, 300, b).r);
}

TEST_CASE("attack algebra") {
  std::mt19937_64 gen(3);
  std::vector<std::uint8_t> plain(64);
  std::vector<std::uint16_t> known(64), target(64);
  for (auto& p : plain) p = static_cast<std::uint8_t>(gen());
  for (auto& k : known) k = static_cast<std::uint16_t>(gen());
  for (auto& t : target) t = static_cast<std::uint16_t>(gen());

  CHECK(chosen_plaintext_attack(plain, known, known) == plain);

  const std::vector<std::uint8_t> zeros(64, 0);
  const auto candidate = chosen_plaintext_attack(zeros, known, target);
  for (std::size_t i = 0; i < 64; ++i) CHECK(candidate[i] == ((known[i] ^ target[i]) & 0xFF));

  CHECK_THROWS_AS(chosen_plaintext_attack(plain, known, std::vector<std::uint16_t>(63)), Error);
}

TEST_CASE("XOR replay fully breaks a reused-keystream stub") {
  std::mt19937_64 gen(4);
  std::vector<std::uint16_t> keystream(4096);
  for (auto& k : keystream) k = static_cast<std::uint16_t>(gen());
  auto stub = [&](const std::vector<std::uint8_t>& p) {
    std::vector<std::uint16_t> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = static_cast<std::uint16_t>(p[i] ^ keystream[i]);
    return c;
  };
  const auto known = testing::random_image(64, 64, 1).pixels;
  const auto secret = testing::random_image(64, 64, 2).pixels;
  const auto report = evaluate_attack(chosen_plaintext_attack(known, stub(known), stub(secret)), secret);
  CHECK(report.success);
  CHECK(report.match_fraction == 1.0);
}

TEST_CASE("XOR replay fails against the cipher") {
  double total = 0;
  for (std::uint64_t t = 0; t < 10; ++t) {
    const auto known = testing::random_image(64, 64, 100 + t);
    const auto secret = testing::random_image(64, 64, 200 + t);
    RandomStream rng(t);
    const auto known_c = encrypt(known, shared_key(), rng);
    const auto secret_c = encrypt(secret, shared_key(), rng);
    const auto report =
        evaluate_attack(chosen_plaintext_attack(known.pixels, narrow(known_c.pointers), narrow(secret_c.pointers)),
                        secret.pixels);
    CHECK_FALSE(report.success);
    total += report.match_fraction;
  }
  CHECK(total / 10 <= 0.05);
}

TEST_CASE("evaluate_attack scoring") {
  const std::vector<std::uint8_t> a{1, 2, 3, 4};
  const auto same = evaluate_attack(a, a);
  CHECK(same.success);
  CHECK(same.match_fraction == 1.0);
  CHECK(same.recovered == a);

  std::vector<std::uint8_t> complement(a);
  for (auto& v : complement) v = static_cast<std::uint8_t>(~v);
  const auto none = evaluate_attack(complement, a);
  CHECK_FALSE(none.success);
  CHECK(none.match_fraction == 0.0);

  std::vector<std::uint8_t> x(16, 7), y(16, 7);
  y[9] = 8;
  const auto one_off = evaluate_attack(x, y);
  CHECK(one_off.match_fraction == doctest::Approx(0.9375));
  CHECK_FALSE(one_off.success);

  CHECK_THROWS_AS(evaluate_attack(a, std::vector<std::uint8_t>(3)), Error);
}

TEST_CASE("differential sensitivity") {
  const auto& key = shared_key();
  REQUIRE(key.min_multiplicity() >= 16);
  const auto img = testing::random_image(64, 64, 55);
  RandomStream rng(8);
  CHECK(differential_sensitivity(img, key, 10, rng) >= 0.99);
  CHECK(paired_seed_sensitivity(img, key, 10, rng) == doctest::Approx(1.0 / 4096));
  CHECK(code_of([&] { differential_sensitivity(img, key, 0, rng); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("change_rate") {
  const std::vector<std::uint32_t> a{1, 2, 3, 4}, b{1, 0, 3, 0};
  CHECK(change_rate(a, a) == 0.0);
  CHECK(change_rate(a, b) == 0.5);
  CHECK_THROWS_AS(change_rate(a, std::vector<std::uint32_t>{1}), Error);
}
