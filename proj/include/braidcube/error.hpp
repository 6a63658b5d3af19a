#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidcube {

enum class Errc {
  OutOfRange,
  SelfLoop,
  RankTooSmall,
  IntervalOutOfRange,
  NotReduced,
  NotAShadow,
  NotACommutation,
  CapExceeded,
  NotInClass,
  NotALink,
  NotTriangleFree,
  NotFibonacci,
  InternalInvariantViolation,
  SpecInvalid,
  NoSuchMember,
  LabelCollision,
  DimensionTooLarge,
  Disconnected,
  NotPartialCube,
  BoundExceeded,
  TooLarge,
  Parse,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class CapExceededError : public Error {
 public:
  CapExceededError(std::size_t partial_count, std::size_t cap);

  // Number of distinct words discovered before enumeration stopped.
  std::size_t partial_count() const noexcept { return partial_count_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t partial_count_;
  std::size_t cap_;
};

}  // namespace braidcube
