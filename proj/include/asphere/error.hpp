#ifndef ASPHERE_ERROR_HPP_
#define ASPHERE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace asphere {

  enum class ErrorKind {
    IndexOutOfWindow,
    ZeroColumn,
    NonCoprimeColumn,
    NotUnimodular,
    WindowMismatch,
    DanglingRelator,
    InvalidPresentation,
    InvalidComplex,
    NotAGraph,
    NotHomologyTrivialUnit,
    BadSelection,
    NotOneFull,
    IncompleteTable,
    ParseError,
    InvariantViolation,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Single exception type for the library; callers branch on kind().
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  // Parse failures carry a 1-based line and column.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what)
        : Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace asphere

#endif  // ASPHERE_ERROR_HPP_
