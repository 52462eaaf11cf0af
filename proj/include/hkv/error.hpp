#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hkv {

enum class ErrorKind {
  NotSymmetric,
  Degenerate,
  BadShape,
  WrongCubicDegree,
  DegenerateMiddlePairing,
  DegeneratePairing,
  DimensionMismatch,
  RingMismatch,
  RosterMismatch,
  SizeLimitExceeded,
  ParseError,
  FileNotFound,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace hkv
