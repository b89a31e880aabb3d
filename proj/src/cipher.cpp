#include "dmc/cipher.hpp"

#include <algorithm>
#include <array>

#include "dmc/dna_codec.hpp"
#include "dmc/error.hpp"
#include "dmc/magic_square.hpp"

namespace dmc {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'D', 'M', 'C', '1'};
constexpr std::uint8_t kFlagFingerprint = 0x01;

Permutation scrambling_for(std::uint32_t side) { return to_permutation(generate_doubly_even(side)); }

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[offset + i]) << (8 * i);
  return value;
}

}  // namespace

void check_cipher_dimensions(std::uint64_t width, std::uint64_t height) {
  // The upper bound keeps n*n inside the 32-bit permutation index space.
  if (width != height || width == 0 || width % 4 != 0 || width > 65532) throw DimensionError(width, height);
}

CipherImage encrypt(const PlainImage& image, const ReferenceKey& key, RandomStream& rng, EncryptOptions options) {
  check_cipher_dimensions(image.width, image.height);
  if (image.pixels.size() != std::size_t{image.width} * image.height) {
    throw Error(ErrorCode::LengthMismatch, "pixel count does not match image dimensions");
  }
  const auto grid = substitute(synthesize(image), key, rng);
  CipherImage cipher;
  cipher.width = image.width;
  cipher.height = image.height;
  cipher.pointers = scramble<std::uint32_t>(grid.pointers, scrambling_for(image.width));
  if (options.embed_fingerprint) cipher.fingerprint = key.fingerprint();
  return cipher;
}

PlainImage decrypt(const CipherImage& cipher, const ReferenceKey& key) {
  check_cipher_dimensions(cipher.width, cipher.height);
  if (cipher.fingerprint && *cipher.fingerprint != key.fingerprint()) {
    throw Error(ErrorCode::WrongKey, "ciphertext was produced with a different key sequence");
  }
  PointerGrid grid{cipher.width, cipher.height,
                   unscramble<std::uint32_t>(cipher.pointers, scrambling_for(cipher.width))};
  return resynthesize(reverse_substitute(grid, key));
}

std::vector<std::uint8_t> serialize(const CipherImage& cipher) {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.reserve(kContainerHeaderSize + 8 + cipher.pointers.size() * 2);
  out.push_back(kContainerVersion);
  out.push_back(cipher.flags());
  put_le<std::uint32_t>(out, cipher.width);
  put_le<std::uint32_t>(out, cipher.height);
  if (cipher.fingerprint) put_le<std::uint64_t>(out, *cipher.fingerprint);
  for (std::size_t i = 0; i < cipher.pointers.size(); ++i) {
    const auto p = cipher.pointers[i];
    if (p >= kWindowStarts) throw PointerOutOfRangeError(i, p);
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(p));
  }
  return out;
}

CipherImage deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(ErrorCode::BadMagic, "not a DMC1 container");
  }
  if (bytes.size() < kContainerHeaderSize) throw Error(ErrorCode::TruncatedPayload, "container header is incomplete");
  const auto version = bytes[4];
  if (version != kContainerVersion) {
    throw Error(ErrorCode::UnsupportedVersion, "container version " + std::to_string(version));
  }
  const auto flags = bytes[5];
  if ((flags & ~kFlagFingerprint) != 0) {
    throw Error(ErrorCode::UnsupportedVersion, "reserved flag bits set in version 1 container");
  }

  CipherImage cipher;
  cipher.width = get_le<std::uint32_t>(bytes, 6);
  cipher.height = get_le<std::uint32_t>(bytes, 10);
  check_cipher_dimensions(cipher.width, cipher.height);

  std::size_t offset = kContainerHeaderSize;
  if (flags & kFlagFingerprint) {
    if (bytes.size() < offset + 8) throw Error(ErrorCode::TruncatedPayload, "fingerprint is incomplete");
    cipher.fingerprint = get_le<std::uint64_t>(bytes, offset);
    offset += 8;
  }

  const std::size_t cells = std::size_t{cipher.width} * cipher.height;
  const std::size_t expected = offset + cells * 2;
  if (bytes.size() < expected) {
    throw Error(ErrorCode::TruncatedPayload, "payload has " + std::to_string(bytes.size() - offset) + " of " +
                                                 std::to_string(cells * 2) + " bytes");
  }
  if (bytes.size() > expected) {
    throw Error(ErrorCode::TrailingData, std::to_string(bytes.size() - expected) + " bytes after payload");
  }
  cipher.pointers.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) cipher.pointers[i] = get_le<std::uint16_t>(bytes, offset + 2 * i);
  return cipher;
}

}  // namespace dmc
