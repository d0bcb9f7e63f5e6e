#pragma once

#include <stdexcept>
#include <string>

namespace malcev {

enum class Errc {
  DimensionMismatch,
  AlgebraMismatch,
  ZeroPolynomial,
  NotAnIdeal,
  NotMalcev,
  NotDirect,
  NotIIdeal,
  NotASubalgebra,
  NotNilpotent,
  NotInsideN,
  NotInN,
  HMismatch,
  ParseError,
  DuplicatePair,
  UnknownBasisLabel,
  SelfBracket,
  MalformedRational,
  UnknownAlgebra,
};

const char* errc_name(Errc c);

/// Library error: a code (stable name, used by the CLI diagnostics) plus detail.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

private:
  Errc code_;
};

}  // namespace malcev
