#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmc {

enum class ErrorCode {
  MalformedHeader,
  UnsupportedMaxval,
  TruncatedPayload,
  InvalidSymbol,
  EmptySequence,
  SequenceTooShort,
  QuadCoverageError,
  NotDoublyEven,
  LengthMismatch,
  QuadNotCovered,
  PointerOutOfRange,
  DimensionError,
  WrongKey,
  BadMagic,
  UnsupportedVersion,
  TrailingData,
  ZeroVariance,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Base exception for every contract/data error raised by the library.
/// what() is "<ErrorName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

class InvalidSymbolError : public Error {
 public:
  InvalidSymbolError(std::size_t offset, char symbol);
  std::size_t offset() const noexcept { return offset_; }
  char symbol() const noexcept { return symbol_; }

 private:
  std::size_t offset_;
  char symbol_;
};

class SequenceTooShortError : public Error {
 public:
  explicit SequenceTooShortError(std::size_t actual_length);
  std::size_t actual_length() const noexcept { return actual_length_; }

 private:
  std::size_t actual_length_;
};

class QuadCoverageError : public Error {
 public:
  explicit QuadCoverageError(std::vector<std::uint8_t> missing);
  const std::vector<std::uint8_t>& missing() const noexcept { return missing_; }

 private:
  std::vector<std::uint8_t> missing_;
};

class PointerOutOfRangeError : public Error {
 public:
  PointerOutOfRangeError(std::size_t index, std::uint64_t value);
  std::size_t index() const noexcept { return index_; }
  std::uint64_t value() const noexcept { return value_; }

 private:
  std::size_t index_;
  std::uint64_t value_;
};

class DimensionError : public Error {
 public:
  DimensionError(std::uint64_t width, std::uint64_t height);
  std::uint64_t width() const noexcept { return width_; }
  std::uint64_t height() const noexcept { return height_; }

 private:
  std::uint64_t width_;
  std::uint64_t height_;
};

}  // namespace dmc
