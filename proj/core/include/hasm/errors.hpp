#pragma once

#include <stdexcept>
#include <string>

namespace hasm {

/// Base class for all diagnosable failures raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// Arithmetic left the value domain: division by zero, overflow to
/// infinity, NaN. Finite reals and booleans are the only values.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A sort violation reached evaluation. Unreachable for programs that
/// passed static checking; kept as a hard failure for hand-built terms.
class SortError : public Error {
public:
  using Error::Error;
};

/// Names of the static diagnostics the parser can raise.
enum class Diag {
  Generic,
  MixedParBlock,
  StaticAssignment,
  SortMismatch,
  UnknownSymbol,
};

const char* diag_name(Diag d);

/// Syntax or static-check failure, carrying a source position.
class ParseError : public Error {
public:
  ParseError(int line, int col, Diag diag, const std::string& msg);

  int line() const { return line_; }
  int col() const { return col_; }
  Diag diag() const { return diag_; }

private:
  int line_;
  int col_;
  Diag diag_;
};

}  // namespace hasm
