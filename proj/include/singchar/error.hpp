#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace singchar {

enum class Errc {
  InvalidCharacteristic,
  DivisionByZero,
  FieldMismatch,
  BothZero,
  SyntaxError,
  UnknownVariable,
  TooManyVariables,
  RingMismatch,
  NotLocal,
  NotInvertible,
  ZeroIdeal,
  NotZeroDimensional,
  EmptyComplement,
  ZeroInput,
  OrderTooSmall,
  NotInMaximalIdeal,
  WrongArity,
  FaceNotOnDiagram,
  DivergentDiagram,
  NoFacet,
  NotConvenient,
  NotQuasihomogeneous,
  NotInnerFace,
  InternalInconsistency,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidCharacteristic: return "InvalidCharacteristic";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::BothZero: return "BothZero";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::NotLocal: return "NotLocal";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::EmptyComplement: return "EmptyComplement";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::NotInMaximalIdeal: return "NotInMaximalIdeal";
    case Errc::WrongArity: return "WrongArity";
    case Errc::FaceNotOnDiagram: return "FaceNotOnDiagram";
    case Errc::DivergentDiagram: return "DivergentDiagram";
    case Errc::NoFacet: return "NoFacet";
    case Errc::NotConvenient: return "NotConvenient";
    case Errc::NotQuasihomogeneous: return "NotQuasihomogeneous";
    case Errc::NotInnerFace: return "NotInnerFace";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace singchar
