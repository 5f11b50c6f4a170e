#ifndef DEFCALC_ERRORS_HPP
#define DEFCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace defcalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero rational function") {}
};

class PoleAtPoint : public Error {
 public:
  explicit PoleAtPoint(const std::string& what = "denominator vanishes at the evaluation point")
      : Error(what) {}
};

class DegenerateSample : public Error {
 public:
  DegenerateSample() : Error("no pole-free sample point found in 100 attempts") {}
};

class DenominatorVanishes : public Error {
 public:
  explicit DenominatorVanishes(const std::string& what) : Error(what) {}
};

// Signals an arithmetic bug: a division that must be exact left a remainder.
class InexactDivision : public Error {
 public:
  explicit InexactDivision(const std::string& what) : Error(what) {}
};

class ZeroLowerPochhammer : public Error {
 public:
  explicit ZeroLowerPochhammer(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class SameSlot : public Error {
 public:
  SameSlot() : Error("Casimir two-tensor requested on a single slot") {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace defcalc

#endif  // DEFCALC_ERRORS_HPP
