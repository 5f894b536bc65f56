#pragma once

#include <stdexcept>
#include <string>

namespace wgt {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WGT_DEFINE_ERROR(Name)              \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

WGT_DEFINE_ERROR(DegenerateNodes);
WGT_DEFINE_ERROR(ArityError);
WGT_DEFINE_ERROR(SingularLead);
WGT_DEFINE_ERROR(ShapeError);
WGT_DEFINE_ERROR(InvariantViolation);
WGT_DEFINE_ERROR(ValidationError);
WGT_DEFINE_ERROR(IndexError);
WGT_DEFINE_ERROR(OrderError);
WGT_DEFINE_ERROR(EvaluationError);
WGT_DEFINE_ERROR(NotInvariant);
WGT_DEFINE_ERROR(ParseError);

#undef WGT_DEFINE_ERROR

}  // namespace wgt
