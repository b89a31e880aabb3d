#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmc/dna_codec.hpp"

namespace dmc {

/// Number of indexed start positions; every pointer fits in 16 bits.
inline constexpr std::size_t kWindowStarts = 65536;
/// Shortest usable key: every window start begins a full quad, plus one spare base.
inline constexpr std::size_t kMinKeyLength = kWindowStarts + 4;

struct NucleotideSequence {
  std::vector<Nucleotide> bases;
  std::string source_name;

  std::size_t size() const noexcept { return bases.size(); }
  std::string to_string() const;
};

enum class ParseMode { Strict, Sanitize };

/// Concatenates the sequence lines of every record in a FASTA text.
/// Lines starting with '>' are headers; whitespace is dropped and case
/// folded. Strict mode throws InvalidSymbolError (byte offset into
/// `text`) on anything outside ACGT, sanitize mode skips it.
NucleotideSequence parse_fasta(std::string_view text, ParseMode mode = ParseMode::Strict,
                               std::string source_name = {});

/// FNV-1a 64 over the ASCII symbols of the first kMinKeyLength bases.
std::uint64_t key_fingerprint(const NucleotideSequence& seq);

/// Occurrence positions of each of the 256 quads over window starts
/// [0, kWindowStarts). Lists are sorted ascending and together partition
/// the window.
class KmerIndex {
 public:
  static KmerIndex build(std::span<const Nucleotide> bases);

  std::span<const std::uint16_t> occurrences(std::uint8_t quad) const noexcept { return lists_[quad]; }
  std::size_t multiplicity(std::uint8_t quad) const noexcept { return lists_[quad].size(); }
  std::size_t min_multiplicity() const noexcept { return min_multiplicity_; }
  std::size_t window_starts() const noexcept { return kWindowStarts; }

 private:
  std::array<std::vector<std::uint16_t>, 256> lists_;
  std::size_t min_multiplicity_ = 0;
};

/// Shared secret of sender and receiver: the key sequence plus its index.
/// Immutable after construction, so one instance can serve concurrent
/// encrypt/decrypt calls.
class ReferenceKey {
 public:
  const NucleotideSequence& sequence() const noexcept { return sequence_; }
  const KmerIndex& index() const noexcept { return index_; }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }
  std::size_t min_multiplicity() const noexcept { return index_.min_multiplicity(); }

  /// Pixel value of the quad starting at `position`; position must be < kWindowStarts.
  std::uint8_t quad_at(std::size_t position) const noexcept;

 private:
  friend ReferenceKey build_key(NucleotideSequence seq);
  ReferenceKey(NucleotideSequence seq, KmerIndex index, std::uint64_t fingerprint)
      : sequence_(std::move(seq)), index_(std::move(index)), fingerprint_(fingerprint) {}

  NucleotideSequence sequence_;
  KmerIndex index_;
  std::uint64_t fingerprint_;
};

/// Throws SequenceTooShortError, or QuadCoverageError when some quad never
/// occurs in the window (such a key cannot encrypt every pixel value).
ReferenceKey build_key(NucleotideSequence seq);

}  // namespace dmc
