#pragma once

#include <stdexcept>
#include <string>

namespace calex {

enum class ErrorKind {
  InvalidArgument,
  ZeroAtNegativeExponent,
  NotUnipotentSplit,
  NotPolynomial,
  ZeroPolynomial,
  WordSyntax,
  PolySyntax,
  FileSyntax,
  NotConjugationRelator,
  IndexOutOfRange,
  NotEquivariant,
  NotFinite,
  ExpansionTooLarge,
  EvenOrder,
  NotIrreducible,
  NotNormalForm,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroAtNegativeExponent: return "ZeroAtNegativeExponent";
    case ErrorKind::NotUnipotentSplit: return "NotUnipotentSplit";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::WordSyntax: return "WordSyntax";
    case ErrorKind::PolySyntax: return "PolySyntax";
    case ErrorKind::FileSyntax: return "FileSyntax";
    case ErrorKind::NotConjugationRelator: return "NotConjugationRelator";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::ExpansionTooLarge: return "ExpansionTooLarge";
    case ErrorKind::EvenOrder: return "EvenOrder";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotNormalForm: return "NotNormalForm";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` tells callers which
/// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for malformed textual input (as opposed to violated preconditions).
  bool is_syntax() const noexcept {
    return kind_ == ErrorKind::WordSyntax || kind_ == ErrorKind::PolySyntax ||
           kind_ == ErrorKind::FileSyntax;
  }

 private:
  ErrorKind kind_;
};

}  // namespace calex
