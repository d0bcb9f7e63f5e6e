#include "malcev/errors.hpp"

namespace malcev {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotMalcev: return "NotMalcev";
    case Errc::NotDirect: return "NotDirect";
    case Errc::NotIIdeal: return "NotIIdeal";
    case Errc::NotASubalgebra: return "NotASubalgebra";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotInsideN: return "NotInsideN";
    case Errc::NotInN: return "NotInN";
    case Errc::HMismatch: return "HMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicatePair: return "DuplicatePair";
    case Errc::UnknownBasisLabel: return "UnknownBasisLabel";
    case Errc::SelfBracket: return "SelfBracket";
    case Errc::MalformedRational: return "MalformedRational";
    case Errc::UnknownAlgebra: return "UnknownAlgebra";
  }
  return "Error";
}

}  // namespace malcev
