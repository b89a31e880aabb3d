#include "dmc/error.hpp"

#include <cstdio>

#include "dmc/dna_codec.hpp"

namespace dmc {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::UnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::InvalidSymbol: return "InvalidSymbol";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::SequenceTooShort: return "SequenceTooShort";
    case ErrorCode::QuadCoverageError: return "QuadCoverageError";
    case ErrorCode::NotDoublyEven: return "NotDoublyEven";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::QuadNotCovered: return "QuadNotCovered";
    case ErrorCode::PointerOutOfRange: return "PointerOutOfRange";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::WrongKey: return "WrongKey";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::TrailingData: return "TrailingData";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

namespace {

std::string describe_symbol(char symbol) {
  auto byte = static_cast<unsigned char>(symbol);
  if (byte >= 0x20 && byte < 0x7f) return std::string("'") + symbol + "'";
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%02X", byte);
  return buf;
}

std::string list_quads(const std::vector<std::uint8_t>& missing) {
  std::string out = std::to_string(missing.size()) + " quad(s) never occur in the key window:";
  std::size_t shown = 0;
  for (auto q : missing) {
    if (shown++ == 16) {
      out += " ...";
      break;
    }
    out += ' ';
    out += to_string(encode_pixel(q));
  }
  return out;
}

}  // namespace

InvalidSymbolError::InvalidSymbolError(std::size_t offset, char symbol)
    : Error(ErrorCode::InvalidSymbol,
            "symbol " + describe_symbol(symbol) + " at byte offset " + std::to_string(offset)),
      offset_(offset),
      symbol_(symbol) {}

SequenceTooShortError::SequenceTooShortError(std::size_t actual_length)
    : Error(ErrorCode::SequenceTooShort,
            "key sequence has " + std::to_string(actual_length) + " bases, need at least 65540"),
      actual_length_(actual_length) {}

QuadCoverageError::QuadCoverageError(std::vector<std::uint8_t> missing)
    : Error(ErrorCode::QuadCoverageError, list_quads(missing)), missing_(std::move(missing)) {}

PointerOutOfRangeError::PointerOutOfRangeError(std::size_t index, std::uint64_t value)
    : Error(ErrorCode::PointerOutOfRange,
            "pointer " + std::to_string(value) + " at cell " + std::to_string(index) +
                " is outside the 65536-position window"),
      index_(index),
      value_(value) {}

DimensionError::DimensionError(std::uint64_t width, std::uint64_t height)
    : Error(ErrorCode::DimensionError,
            "image is " + std::to_string(width) + "x" + std::to_string(height) +
                "; the cipher needs a square image whose side is a positive multiple of 4"),
      width_(width),
      height_(height) {}

}  // namespace dmc
