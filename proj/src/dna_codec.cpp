#include "dmc/dna_codec.hpp"

#include <algorithm>

namespace dmc {

char to_char(Nucleotide n) noexcept {
  switch (n) {
    case Nucleotide::C: return 'C';
    case Nucleotide::T: return 'T';
    case Nucleotide::A: return 'A';
    case Nucleotide::G: return 'G';
  }
  return '?';
}

std::optional<Nucleotide> nucleotide_from_char(char c) noexcept {
  switch (c) {
    case 'C': case 'c': return Nucleotide::C;
    case 'T': case 't': return Nucleotide::T;
    case 'A': case 'a': return Nucleotide::A;
    case 'G': case 'g': return Nucleotide::G;
    default: return std::nullopt;
  }
}

std::string to_string(const Quad& q) {
  std::string s(4, ' ');
  std::transform(q.bases.begin(), q.bases.end(), s.begin(), to_char);
  return s;
}

std::optional<Quad> quad_from_string(std::string_view text) noexcept {
  if (text.size() != 4) return std::nullopt;
  Quad q;
  for (std::size_t i = 0; i < 4; ++i) {
    auto n = nucleotide_from_char(text[i]);
    if (!n) return std::nullopt;
    q.bases[i] = *n;
  }
  return q;
}

DnaImage synthesize(const PlainImage& image) {
  DnaImage dna{image.width, image.height, {}};
  dna.quads.resize(image.pixels.size());
  std::transform(image.pixels.begin(), image.pixels.end(), dna.quads.begin(),
                 [](std::uint8_t v) { return encode_pixel(v); });
  return dna;
}

PlainImage resynthesize(const DnaImage& dna) {
  PlainImage image{dna.width, dna.height, {}};
  image.pixels.resize(dna.quads.size());
  std::transform(dna.quads.begin(), dna.quads.end(), image.pixels.begin(),
                 [](const Quad& q) { return decode_quad(q); });
  return image;
}

}  // namespace dmc
