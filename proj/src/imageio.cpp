#include "dmc/imageio.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>

#include "dmc/error.hpp"

namespace dmc {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  // Reads an unsigned decimal token; `what` names it for error messages.
  std::uint64_t number(const char* what, ErrorCode on_missing = ErrorCode::MalformedHeader) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) throw Error(on_missing, std::string("missing ") + what);
    if (!std::isdigit(bytes_[pos_])) {
      throw Error(ErrorCode::MalformedHeader, std::string("expected a number for ") + what);
    }
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorCode::MalformedHeader, std::string(what) + " is too large");
      }
      ++pos_;
    }
    if (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw Error(ErrorCode::MalformedHeader, std::string("bad token after ") + what);
    }
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

PlainImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
    throw Error(ErrorCode::MalformedHeader, "expected magic P5 or P2");
  }
  const bool binary = bytes[1] == '5';
  HeaderReader reader(bytes);
  reader.advance(2);
  if (reader.pos() < bytes.size() && !std::isspace(bytes[reader.pos()]) && bytes[reader.pos()] != '#') {
    throw Error(ErrorCode::MalformedHeader, "magic must be followed by whitespace");
  }

  const auto width = reader.number("width");
  const auto height = reader.number("height");
  const auto maxval = reader.number("maxval");
  if (width == 0 || height == 0) throw Error(ErrorCode::MalformedHeader, "zero image dimension");
  if (maxval != 255) {
    throw Error(ErrorCode::UnsupportedMaxval, "maxval " + std::to_string(maxval) + " (only 255 is supported)");
  }

  PlainImage image;
  image.width = static_cast<std::uint32_t>(width);
  image.height = static_cast<std::uint32_t>(height);
  const std::uint64_t count = width * height;

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (reader.pos() >= bytes.size()) throw Error(ErrorCode::TruncatedPayload, "no raster after header");
    reader.advance(1);
    const std::size_t available = bytes.size() - reader.pos();
    if (available < count) {
      throw Error(ErrorCode::TruncatedPayload,
                  "raster has " + std::to_string(available) + " of " + std::to_string(count) + " bytes");
    }
    auto first = bytes.begin() + static_cast<std::ptrdiff_t>(reader.pos());
    image.pixels.assign(first, first + static_cast<std::ptrdiff_t>(count));
    return image;
  }

  image.pixels.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, bytes.size())));
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto value = reader.number("pixel", ErrorCode::TruncatedPayload);
    if (value > 255) throw Error(ErrorCode::MalformedHeader, "pixel value " + std::to_string(value) + " exceeds maxval");
    image.pixels.push_back(static_cast<std::uint8_t>(value));
  }
  return image;
}

std::vector<std::uint8_t> write_pgm(const PlainImage& image) {
  const std::string header =
      "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

}  // namespace dmc
