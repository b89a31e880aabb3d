#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dmc/imageio.hpp"
#include "dmc/random.hpp"
#include "dmc/reference_key.hpp"
#include "dmc/substitution.hpp"

namespace dmc {

/// Encrypted image: scrambled key pointers, same spatial size as the
/// plaintext. Each cell is 16 bits on the wire, so the byte size is twice
/// the plaintext raster.
struct CipherImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint32_t> pointers;
  std::optional<std::uint64_t> fingerprint;

  std::uint8_t flags() const noexcept { return fingerprint ? 0x01 : 0x00; }

  friend bool operator==(const CipherImage&, const CipherImage&) = default;
};

struct EncryptOptions {
  /// Embed the key fingerprint so decrypt can report WrongKey.
  bool embed_fingerprint = false;
};

/// Square image with side a positive multiple of 4; else DimensionError.
void check_cipher_dimensions(std::uint64_t width, std::uint64_t height);

/// synthesize -> substitute -> scramble by the order-n magic square.
CipherImage encrypt(const PlainImage& image, const ReferenceKey& key, RandomStream& rng,
                    EncryptOptions options = {});

/// unscramble -> reverse_substitute -> resynthesize. Deterministic.
PlainImage decrypt(const CipherImage& cipher, const ReferenceKey& key);

// DMC1 container, all integers little-endian:
//   0..3   "DMC1"
//   4      version (1)
//   5      flags (bit 0: fingerprint present; other bits reserved, zero)
//   6..9   width (u32)
//   10..13 height (u32)
//   14..21 fingerprint (u64), only when flags bit 0 is set
//   then width*height pointers, u16 each, row-major, already scrambled
inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kContainerHeaderSize = 14;

std::vector<std::uint8_t> serialize(const CipherImage& cipher);
CipherImage deserialize(std::span<const std::uint8_t> bytes);

}  // namespace dmc
