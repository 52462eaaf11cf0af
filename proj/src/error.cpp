#include "hkv/error.hpp"

namespace hkv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::WrongCubicDegree: return "WrongCubicDegree";
    case ErrorKind::DegenerateMiddlePairing: return "DegenerateMiddlePairing";
    case ErrorKind::DegeneratePairing: return "DegeneratePairing";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::RosterMismatch: return "RosterMismatch";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FileNotFound: return "FileNotFound";
  }
  return "Unknown";
}

}  // namespace hkv
