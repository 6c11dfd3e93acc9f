#pragma once

#include <stdexcept>
#include <string>

namespace tlj {

/// Base class of every error raised by the library.  `code()` is the
/// process exit status the CLI maps the error to.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int code() const noexcept { return 1; }
};

#define TLJ_DEFINE_ERROR(Name, exit_code)                      \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& what) : Error(what) {}    \
    int code() const noexcept override { return exit_code; }   \
  };

// input validation
TLJ_DEFINE_ERROR(ParseError, 2)
TLJ_DEFINE_ERROR(InvalidRoot, 2)
TLJ_DEFINE_ERROR(InvalidParameters, 2)
TLJ_DEFINE_ERROR(IndexOutOfRange, 2)
TLJ_DEFINE_ERROR(ShapeMismatch, 2)
TLJ_DEFINE_ERROR(FieldMismatch, 2)
TLJ_DEFINE_ERROR(WrongD, 2)
TLJ_DEFINE_ERROR(Unsupported, 2)
TLJ_DEFINE_ERROR(RepeatedRoot, 2)
TLJ_DEFINE_ERROR(NotIsotropic, 2)
TLJ_DEFINE_ERROR(OddCrossingParity, 2)

// mathematical obstructions
TLJ_DEFINE_ERROR(DegenerateParameter, 3)
TLJ_DEFINE_ERROR(DivisionByZero, 3)
TLJ_DEFINE_ERROR(NonModular, 3)
TLJ_DEFINE_ERROR(MissingExtension, 3)
TLJ_DEFINE_ERROR(NonIntegral, 3)

// resource limits
TLJ_DEFINE_ERROR(ResourceLimit, 4)

#undef TLJ_DEFINE_ERROR

/// Raised when a Jones-Wenzl projector is requested at a loop value where
/// Delta_k(d) vanishes for some k below the strand count.
class ChebyshevRoot : public Error {
 public:
  explicit ChebyshevRoot(int k)
      : Error("Delta_" + std::to_string(k) + "(d) = 0: projector does not exist"), k_(k) {}
  int index() const noexcept { return k_; }
  int code() const noexcept override { return 3; }

 private:
  int k_;
};

}  // namespace tlj
