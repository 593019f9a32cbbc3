#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topomon {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by decompose() when the input set is not monitorable: the
/// regular-open/nowhere-dense decomposition is only defined on M(X).
struct NotMonitorableError : Error {
  using Error::Error;
};

/// Raised by the fast hyperconnected-space decider when its precondition
/// (non-empty hyperconnected space) fails.
struct NotHyperconnectedError : Error {
  using Error::Error;
};

/// Raised by the exhaustive test oracles when asked to enumerate a space
/// beyond their configured point bound.
struct SizeGuardError : Error {
  using Error::Error;
};

/// Raised by extend_to_hyperconnected when every state of the finite carrier
/// already occurs in a required or forbidden triple.
struct NoFreshStateError : Error {
  using Error::Error;
};

/// Input-format error. Carries the 1-based line and the offending token so
/// callers can produce a precise diagnostic.
struct ParseError : Error {
  std::size_t line;
  std::string token;

  ParseError(std::size_t line_no, std::string tok, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what +
              (tok.empty() ? std::string{} : " (token '" + tok + "')")),
        line(line_no),
        token(std::move(tok)) {}
};

}  // namespace topomon
