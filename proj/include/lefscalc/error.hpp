#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lefscalc {

enum class ErrorKind {
  InvalidInput,          // parse or schema problems
  InvalidComplex,        // a complex failed validation
  UnknownCell,
  ShapeMismatch,
  BoundExceeded,
  ZeroPolynomial,
  NonSimplicialMap,
  FixedPointNotSimplicial,
  NotLocalizable,        // 1 is a normal eigenvalue
  NotHyperbolic,         // det(I - A) == 0 where a sign is needed
  NoApplicableRegime,
  MissingNormalData,
  NotInvariant,
  Degenerate,            // ties of a vertex functional along edges
  CellSpaceUnsupported,
  BadPartition,
  InconsistentPattern,
};

const char* to_string(ErrorKind kind);

/// Process exit code used by the command-line tool for each error family.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::vector<std::string> details = {})
      : std::runtime_error(what), kind_(kind), details_(std::move(details)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> details_;
};

}  // namespace lefscalc
