#pragma once

#include <stdexcept>
#include <string>

namespace shiftcis {

class Error : public std::runtime_error {
 public:
  Error(const std::string& kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(kind) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Bad input: malformed sets, parameters outside an operation's domain.
// The CLI maps these to exit status 2.
class ValidationError : public Error {
  using Error::Error;
};

// A computation ran but a numerical diagnostic failed. Exit status 3.
class NumericalError : public Error {
  using Error::Error;
};

#define SHIFTCIS_ERROR(Name, Base)                                      \
  class Name : public Base {                                            \
   public:                                                              \
    explicit Name(const std::string& what) : Base(#Name, what) {}       \
  };

SHIFTCIS_ERROR(ParseError, ValidationError)
SHIFTCIS_ERROR(DomainError, ValidationError)
SHIFTCIS_ERROR(OverlapError, ValidationError)
SHIFTCIS_ERROR(GapError, ValidationError)
SHIFTCIS_ERROR(LengthError, ValidationError)
SHIFTCIS_ERROR(ExcludedAlphaError, ValidationError)
SHIFTCIS_ERROR(OriginCrossingError, ValidationError)
SHIFTCIS_ERROR(ZeroBaseError, ValidationError)
SHIFTCIS_ERROR(PoleError, ValidationError)
SHIFTCIS_ERROR(IntegerPoleError, ValidationError)
SHIFTCIS_ERROR(WindowError, ValidationError)
SHIFTCIS_ERROR(HalfIntegerAlphaError, ValidationError)
SHIFTCIS_ERROR(DegenerateError, ValidationError)

SHIFTCIS_ERROR(UndefinedDirectionError, NumericalError)
SHIFTCIS_ERROR(NonIntegerIndexError, NumericalError)
SHIFTCIS_ERROR(OriginProximityError, NumericalError)
SHIFTCIS_ERROR(UndersampledError, NumericalError)
SHIFTCIS_ERROR(NearSingularSymbolError, NumericalError)
SHIFTCIS_ERROR(NonIntegerExponentError, NumericalError)
SHIFTCIS_ERROR(IndexMismatchError, NumericalError)

#undef SHIFTCIS_ERROR

}  // namespace shiftcis
