#include "braidcube/error.hpp"

namespace braidcube {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::IntervalOutOfRange: return "IntervalOutOfRange";
    case Errc::NotReduced: return "NotReduced";
    case Errc::NotAShadow: return "NotAShadow";
    case Errc::NotACommutation: return "NotACommutation";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotInClass: return "NotInClass";
    case Errc::NotALink: return "NotALink";
    case Errc::NotTriangleFree: return "NotTriangleFree";
    case Errc::NotFibonacci: return "NotFibonacci";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::SpecInvalid: return "SpecInvalid";
    case Errc::NoSuchMember: return "NoSuchMember";
    case Errc::LabelCollision: return "LabelCollision";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotPartialCube: return "NotPartialCube";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

CapExceededError::CapExceededError(std::size_t partial_count, std::size_t cap)
    : Error(Errc::CapExceeded, "enumeration exceeded cap of " + std::to_string(cap) +
                                   " (found at least " + std::to_string(partial_count) + ")"),
      partial_count_(partial_count),
      cap_(cap) {}

}  // namespace braidcube
