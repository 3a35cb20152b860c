#pragma once

#include <stdexcept>
#include <string>

namespace latbend {

enum class Err {
  NotSquarefree,
  DependentRadicands,
  ZeroRadicand,
  DivisionByZero,
  FieldMismatch,
  ComplexPlace,
  NotPrime,
  BadReduction,
  IrreducibleRadicand,
  DyadicAmbiguity,
  ZeroArgument,
  AlgebraMismatch,
  NotInvertible,
  Degenerate,
  IncompleteTable,
  ExhaustedRetries,
  RelatorViolation,
  DetNotOne,
  NonSplitSpectrum,
  ProductNotOne,
  NonpositiveMultiplier,
  CommutationViolation,
  UnsupportedBasis,
  IsotropicPivotFailure,
  SignatureProfileMismatch,
  EvenCharacteristic,
  BadInput,
  Unsupported,
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) { throw Error(c, what); }

inline const char* err_name(Err c) {
  switch (c) {
    case Err::NotSquarefree: return "NotSquarefree";
    case Err::DependentRadicands: return "DependentRadicands";
    case Err::ZeroRadicand: return "ZeroRadicand";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::ComplexPlace: return "ComplexPlace";
    case Err::NotPrime: return "NotPrime";
    case Err::BadReduction: return "BadReduction";
    case Err::IrreducibleRadicand: return "IrreducibleRadicand";
    case Err::DyadicAmbiguity: return "DyadicAmbiguity";
    case Err::ZeroArgument: return "ZeroArgument";
    case Err::AlgebraMismatch: return "AlgebraMismatch";
    case Err::NotInvertible: return "NotInvertible";
    case Err::Degenerate: return "Degenerate";
    case Err::IncompleteTable: return "IncompleteTable";
    case Err::ExhaustedRetries: return "ExhaustedRetries";
    case Err::RelatorViolation: return "RelatorViolation";
    case Err::DetNotOne: return "DetNotOne";
    case Err::NonSplitSpectrum: return "NonSplitSpectrum";
    case Err::ProductNotOne: return "ProductNotOne";
    case Err::NonpositiveMultiplier: return "NonpositiveMultiplier";
    case Err::CommutationViolation: return "CommutationViolation";
    case Err::UnsupportedBasis: return "UnsupportedBasis";
    case Err::IsotropicPivotFailure: return "IsotropicPivotFailure";
    case Err::SignatureProfileMismatch: return "SignatureProfileMismatch";
    case Err::EvenCharacteristic: return "EvenCharacteristic";
    case Err::BadInput: return "BadInput";
    case Err::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace latbend
