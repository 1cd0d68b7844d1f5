#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knotclasp {

// Every error raised by the library derives from Error and carries a stable
// kind name, which the CLI prints next to the message.
class Error : public std::runtime_error {
 public:
  Error(std::string_view kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  std::string_view kind() const noexcept { return kind_; }

 private:
  std::string_view kind_;
};

#define KNOTCLASP_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  };

KNOTCLASP_DEFINE_ERROR(DomainError)
KNOTCLASP_DEFINE_ERROR(EvaluationAtBreakpoint)
KNOTCLASP_DEFINE_ERROR(PreconditionError)
KNOTCLASP_DEFINE_ERROR(ParameterError)
KNOTCLASP_DEFINE_ERROR(InfiniteGaps)
KNOTCLASP_DEFINE_ERROR(BoundTooSmall)
KNOTCLASP_DEFINE_ERROR(GenusMismatch)
KNOTCLASP_DEFINE_ERROR(NotLSpace)
KNOTCLASP_DEFINE_ERROR(UnsupportedNode)
KNOTCLASP_DEFINE_ERROR(RangeError)
KNOTCLASP_DEFINE_ERROR(StrandMismatch)
KNOTCLASP_DEFINE_ERROR(IndexError)
KNOTCLASP_DEFINE_ERROR(DisconnectedSurface)
KNOTCLASP_DEFINE_ERROR(AmbiguousEigenvalue)
KNOTCLASP_DEFINE_ERROR(NotAKnot)
KNOTCLASP_DEFINE_ERROR(UnknownPair)

#undef KNOTCLASP_DEFINE_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("SyntaxError", what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace knotclasp
