#include "hasm/errors.hpp"

namespace hasm {

const char* diag_name(Diag d) {
  switch (d) {
    case Diag::MixedParBlock: return "MixedParBlock";
    case Diag::StaticAssignment: return "StaticAssignment";
    case Diag::SortMismatch: return "SortMismatch";
    case Diag::UnknownSymbol: return "UnknownSymbol";
    case Diag::Generic: return "ParseError";
  }
  return "ParseError";
}

ParseError::ParseError(int line, int col, Diag diag, const std::string& msg)
    : Error(std::to_string(line) + ":" + std::to_string(col) + ": " +
            diag_name(diag) + ": " + msg),
      line_(line),
      col_(col),
      diag_(diag) {}

}  // namespace hasm
