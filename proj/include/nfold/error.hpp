#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nfold {

enum class ErrorKind {
  FieldMismatch,
  FlavorViolation,
  InvalidField,
  InvalidArgument,
  NotInvertible,
  DivisionByZero,
  NotPrime,
  ScanTooLarge,
  NonUnitLeadingCoefficient,
  CharacteristicNotZero,
  SplitDegenerate,
  ZeroPolynomial,
  UnsupportedField,
  InfiniteRootSet,
  ShapeMismatch,
  NonSquare,
  Singular,
  InfiniteDimension,
  SpaceMismatch,
  AssignmentMismatch,
  RegimeMismatch,
  UnsupportedRegime,
  NotABasis,
  NotACharacteristicValue,
  DoesNotSplit,
  UndecidableOverQ,
  ZeroVector,
  NotInvariant,
  NonInvertibleNorm,
  DependentInput,
  NotOrthogonal,
  UnorderedField,
  ParseError,
  UnknownSuite,
  FixtureMismatch,
  OracleMismatch,
};

inline std::string_view error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::FlavorViolation: return "FlavorViolation";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ScanTooLarge: return "ScanTooLarge";
    case ErrorKind::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorKind::CharacteristicNotZero: return "CharacteristicNotZero";
    case ErrorKind::SplitDegenerate: return "SplitDegenerate";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::InfiniteRootSet: return "InfiniteRootSet";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::InfiniteDimension: return "InfiniteDimension";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::AssignmentMismatch: return "AssignmentMismatch";
    case ErrorKind::RegimeMismatch: return "RegimeMismatch";
    case ErrorKind::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::NotACharacteristicValue: return "NotACharacteristicValue";
    case ErrorKind::DoesNotSplit: return "DoesNotSplit";
    case ErrorKind::UndecidableOverQ: return "UndecidableOverQ";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NonInvertibleNorm: return "NonInvertibleNorm";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::UnorderedField: return "UnorderedField";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::FixtureMismatch: return "FixtureMismatch";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a kind and,
/// where it applies, the evaluation slot or item index that triggered it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail, std::optional<int> slot = {},
        std::optional<std::size_t> index = {})
      : std::runtime_error(compose(kind, detail, slot, index)),
        kind_(kind),
        slot_(slot),
        index_(index),
        detail_(detail) {}

  ErrorKind kind() const { return kind_; }
  std::optional<int> slot() const { return slot_; }
  std::optional<std::size_t> index() const { return index_; }
  const std::string& detail() const { return detail_; }

  /// First report line, e.g. "Singular slot=0".
  std::string headline() const { return head(kind_, slot_, index_); }

 private:
  static std::string head(ErrorKind kind, std::optional<int> slot,
                          std::optional<std::size_t> index) {
    std::string s(error_name(kind));
    if (slot) s += " slot=" + std::to_string(*slot);
    if (index) s += " index=" + std::to_string(*index);
    return s;
  }
  static std::string compose(ErrorKind kind, const std::string& detail,
                             std::optional<int> slot,
                             std::optional<std::size_t> index) {
    std::string s = head(kind, slot, index);
    if (!detail.empty()) s += ": " + detail;
    return s;
  }

  ErrorKind kind_;
  std::optional<int> slot_;
  std::optional<std::size_t> index_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail = {},
                              std::optional<int> slot = {},
                              std::optional<std::size_t> index = {}) {
  throw Error(kind, detail, slot, index);
}

}  // namespace nfold
