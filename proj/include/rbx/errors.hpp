#pragma once

#include <stdexcept>
#include <string>

namespace rbx {

/// Malformed input: bad file syntax, schema violations, dimension
/// mismatches. Carries a human-readable location ("algebra.mul[1][0]",
/// "line 3 col 7", ...). CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
  InputError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what),
        where_(std::move(where)) {}
  const std::string& where() const { return where_; }

private:
  std::string where_;
};

/// Tensor/matrix shapes inconsistent with the declared dimensions.
class ShapeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its stated precondition
/// (non-RB operator passed where one is required, non-involutive
/// cochain, ...).
class PreconditionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A differential failed to preserve the selected eigenspace. Signals
/// input whose involution data is inconsistent.
class EigenspaceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One of the library's built-in cross-checks failed (two-route bracket
/// mismatch, differential sign relation, ...). Never expected on valid
/// input; indicates a bug rather than a user error.
class InternalCheckError : public std::logic_error {
  using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalCheckError(what);
}

}  // namespace rbx
