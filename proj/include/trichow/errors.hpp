#ifndef TRICHOW_ERRORS_HPP
#define TRICHOW_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace trichow {

enum class ErrorKind {
  Structural,          // mismatched variable lists, arities, lengths
  Domain,              // operation undefined for the given value (e.g. zero input)
  NonRadical,          // a derivative product vanishes or is a zero divisor
  ZeroDivisor,         // element not invertible modulo a triangular set
  NotZeroDim,          // extended ideal is not zero-dimensional
  NotLazardShape,      // reduced lex basis is not a monic triangular set
  SingularGrid,        // duplicate interpolation nodes
  GridExhausted,       // too few admissible values at a grid node
  DegreeOverflow,      // polynomial degree exceeds the interpolation space
  RangeTooNarrow,      // no prime found in the requested range
  ContradictsTheorem,  // epsilon substitution collapsed to zero
  NotPrime,            // modulus failed primality testing
  Parse,               // malformed input text
  UnknownVariable,
  ZeroPolynomial,
  BadPrime,                 // a generator vanishes or loses X-degree modulo p
  DenominatorVanishesModP,  // p divides a coefficient denominator
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by invert_modulo; carries the canonical string of a nonzero
/// polynomial g with f*g = 0 in the quotient ring.
class ZeroDivisorError : public Error {
 public:
  ZeroDivisorError(const std::string& what, std::string witness)
      : Error(ErrorKind::ZeroDivisor, what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& msg, int line, int column)
      : Error(kind, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace trichow

#endif  // TRICHOW_ERRORS_HPP
