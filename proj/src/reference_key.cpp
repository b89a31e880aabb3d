#include "dmc/reference_key.hpp"

#include <algorithm>
#include <limits>

#include "dmc/error.hpp"

namespace dmc {

std::string NucleotideSequence::to_string() const {
  std::string s(bases.size(), ' ');
  std::transform(bases.begin(), bases.end(), s.begin(), to_char);
  return s;
}

NucleotideSequence parse_fasta(std::string_view text, ParseMode mode, std::string source_name) {
  NucleotideSequence seq;
  seq.source_name = std::move(source_name);
  seq.bases.reserve(text.size());

  bool line_start = true;
  bool in_header = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n' || c == '\r') {
      line_start = true;
      in_header = false;
      continue;
    }
    if (line_start && c == '>') in_header = true;
    line_start = false;
    if (in_header || c == ' ' || c == '\t' || c == '\f' || c == '\v') continue;

    if (auto n = nucleotide_from_char(c)) {
      seq.bases.push_back(*n);
    } else if (mode == ParseMode::Strict) {
      throw InvalidSymbolError(i, c);
    }
  }
  if (seq.bases.empty()) throw Error(ErrorCode::EmptySequence, "FASTA input contains no bases");
  return seq;
}

std::uint64_t key_fingerprint(const NucleotideSequence& seq) {
  if (seq.size() < kMinKeyLength) throw SequenceTooShortError(seq.size());
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < kMinKeyLength; ++i) {
    hash ^= static_cast<std::uint8_t>(to_char(seq.bases[i]));
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

KmerIndex KmerIndex::build(std::span<const Nucleotide> bases) {
  if (bases.size() < kMinKeyLength) throw SequenceTooShortError(bases.size());
  KmerIndex index;
  for (auto& list : index.lists_) list.reserve(kWindowStarts / 256 * 2);

  // Rolling 8-bit quad value over the window.
  unsigned quad = 0;
  for (std::size_t i = 0; i < 3; ++i) quad = (quad << 2) | static_cast<unsigned>(bases[i]);
  for (std::size_t p = 0; p < kWindowStarts; ++p) {
    quad = ((quad << 2) | static_cast<unsigned>(bases[p + 3])) & 0xFF;
    index.lists_[quad].push_back(static_cast<std::uint16_t>(p));
  }

  index.min_multiplicity_ = std::numeric_limits<std::size_t>::max();
  for (const auto& list : index.lists_) index.min_multiplicity_ = std::min(index.min_multiplicity_, list.size());
  return index;
}

std::uint8_t ReferenceKey::quad_at(std::size_t position) const noexcept {
  const auto& b = sequence_.bases;
  return decode_quad(Quad{{b[position], b[position + 1], b[position + 2], b[position + 3]}});
}

ReferenceKey build_key(NucleotideSequence seq) {
  auto index = KmerIndex::build(seq.bases);
  std::vector<std::uint8_t> missing;
  for (unsigned q = 0; q < 256; ++q) {
    if (index.multiplicity(static_cast<std::uint8_t>(q)) == 0) missing.push_back(static_cast<std::uint8_t>(q));
  }
  if (!missing.empty()) throw QuadCoverageError(std::move(missing));
  const auto fingerprint = key_fingerprint(seq);
  return ReferenceKey(std::move(seq), std::move(index), fingerprint);
}

}  // namespace dmc
