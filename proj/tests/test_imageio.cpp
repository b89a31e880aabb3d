#include <string>

#include "doctest.h"
#include "dmc/error.hpp"
#include "dmc/imageio.hpp"
#include "support.hpp"

using namespace dmc;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

ErrorCode code_of(std::string_view text) {
  try {
    read_pgm(bytes_of(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected read_pgm to throw");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("P5 bytes map directly to pixels") {
  auto data = bytes_of("P5 2 2 255\n");
  data.insert(data.end(), {0x00, 0x7F, 0x80, 0xFF});
  const auto img = read_pgm(data);
  CHECK(img.width == 2);
  CHECK(img.height == 2);
  CHECK(img.pixels == std::vector<std::uint8_t>{0, 127, 128, 255});
}

TEST_CASE("P2 tokens map directly to pixels") {
  const auto img = read_pgm(bytes_of("P2 1 1 255 42"));
  CHECK(img == PlainImage{1, 1, {42}});
}

TEST_CASE("header comments are skipped") {
  const auto img = read_pgm(bytes_of("P2\n# made by hand\n2 1 # trailing\n255\n7 9\n"));
  CHECK(img == PlainImage{2, 1, {7, 9}});
}

TEST_CASE("P2 and P5 encodings parse identically") {
  const auto img = testing::random_image(5, 3, 11);
  std::string p2 = "P2\n5 3\n255\n";
  for (auto p : img.pixels) p2 += std::to_string(p) + " ";
  CHECK(read_pgm(bytes_of(p2)) == read_pgm(write_pgm(img)));
}

TEST_CASE("read_pgm error paths") {
  CHECK(code_of("P5 2 2 65535\n") == ErrorCode::UnsupportedMaxval);
  CHECK(code_of("P6 1 1 255\nabc") == ErrorCode::MalformedHeader);
  CHECK(code_of("P5 x 1 255\n") == ErrorCode::MalformedHeader);
  CHECK(code_of("P5 2") == ErrorCode::MalformedHeader);
  CHECK(code_of("P5 0 2 255\n") == ErrorCode::MalformedHeader);
  CHECK(code_of("P5 2 2 255\n\x01\x02\x03") == ErrorCode::TruncatedPayload);
  CHECK(code_of("P2 2 2 255 1 2 3") == ErrorCode::TruncatedPayload);
  CHECK(code_of("P2 1 1 255 256") == ErrorCode::MalformedHeader);
  CHECK(code_of("") == ErrorCode::MalformedHeader);
}

TEST_CASE("write_pgm canonical form") {
  const auto one = write_pgm(PlainImage{1, 1, {0}});
  auto expected = bytes_of("P5\n1 1\n255\n");
  expected.push_back(0x00);
  CHECK(one == expected);

  const auto four = write_pgm(PlainImage{2, 2, {0, 127, 128, 255}});
  const std::vector<std::uint8_t> payload(four.end() - 4, four.end());
  CHECK(payload == std::vector<std::uint8_t>{0x00, 0x7F, 0x80, 0xFF});
}

TEST_CASE("PGM round-trip for every size 1..128") {
  for (std::uint32_t side = 1; side <= 128; ++side) {
    const auto img = testing::random_image(side, (side * 7) % 13 + 1, side);
    REQUIRE(read_pgm(write_pgm(img)) == img);
  }
}
