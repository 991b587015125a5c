#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crossmap {

enum class ErrorCode {
  DuplicateElement,
  OutOfRange,
  EmptyBlock,
  InvalidLabels,
  ParseError,
  InvalidK,
  TooManyArcs,
  NotFull,
  OutOfBudget,
  Overflow,
  UnknownId,
  NetworkError,
  NoOverlap,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Overflow-checked unsigned arithmetic for exact counts.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "64-bit overflow in addition");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "64-bit overflow in multiplication");
  return r;
}

}  // namespace crossmap
