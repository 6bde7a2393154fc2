#include "asphere/error.hpp"

namespace asphere {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::IndexOutOfWindow: return "IndexOutOfWindow";
      case ErrorKind::ZeroColumn: return "ZeroColumn";
      case ErrorKind::NonCoprimeColumn: return "NonCoprimeColumn";
      case ErrorKind::NotUnimodular: return "NotUnimodular";
      case ErrorKind::WindowMismatch: return "WindowMismatch";
      case ErrorKind::DanglingRelator: return "DanglingRelator";
      case ErrorKind::InvalidPresentation: return "InvalidPresentation";
      case ErrorKind::InvalidComplex: return "InvalidComplex";
      case ErrorKind::NotAGraph: return "NotAGraph";
      case ErrorKind::NotHomologyTrivialUnit: return "NotHomologyTrivialUnit";
      case ErrorKind::BadSelection: return "BadSelection";
      case ErrorKind::NotOneFull: return "NotOneFull";
      case ErrorKind::IncompleteTable: return "IncompleteTable";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
  }

}  // namespace asphere
