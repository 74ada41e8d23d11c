#pragma once

#include <stdexcept>
#include <string>

namespace qacert {

// All recoverable failures derive from Error so callers (CLI, bindings) can
// map them to exit codes / exceptions uniformly.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// PD text that does not scan: bad token, non-integer label, wrong arity.
struct MalformedSyntax : Error {
  using Error::Error;
};

// Every arc label must occur exactly twice across all crossings.
struct ArcUsedNotTwice : Error {
  using Error::Error;
};

// Parsed diagrams must be connected (split inputs are rejected at the door;
// intermediate smoothings may still be split and are handled internally).
struct DisconnectedDiagram : Error {
  using Error::Error;
};

// Face count fails the Euler check V - E + F = 2.
struct NonPlanarDiagram : Error {
  using Error::Error;
};

// Spanning-tree enumeration would exceed the configured budget.
struct TooManyTrees : Error {
  using Error::Error;
};

// A state-sum or search was asked to do more work than its budget allows.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Tangle-replacement coefficients violate the sign condition at the marked
// crossing; carries the 1-based index of the offending coefficient.
struct ExtensionViolated : Error {
  int index;
  ExtensionViolated(const std::string& what, int idx) : Error(what), index(idx) {}
};

// Certificate combination was handed a certificate that does not verify.
struct InvalidInputCertificate : Error {
  using Error::Error;
};

// Table data file could not be located or opened.
struct MissingDataFile : Error {
  using Error::Error;
};

// An operation's documented precondition does not hold (e.g. twisting at a
// crossing of the wrong sign).
struct PreconditionViolated : Error {
  using Error::Error;
};

}  // namespace qacert
