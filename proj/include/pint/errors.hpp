// SPDX-License-Identifier: MIT
//
// Error taxonomy for the exact p-adic period library.
//
// Every failure mode that a caller can meaningfully react to gets its own
// exception type; internal invariant violations go through PINT_CHECK and
// raise InternalError with file/line so they are never mistaken for bad
// input.  All types derive from PintError (itself std::runtime_error) so a
// CLI can catch one base class.

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace pint {

struct PintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic result no longer has any known digits (relative precision <= 0),
// or an operation asked for more digits than a value carries.
struct PrecisionLoss : PintError {
  using PintError::PintError;
};

// Exact int64/__int128 arithmetic would overflow.  Raised instead of
// silently wrapping; callers should rerun with smaller parameters.
struct OverflowError : PintError {
  using PintError::PintError;
};

// Mathematically invalid input: even prime, square "non-square" D,
// valuation out of range, division by exact zero, and similar.
struct DomainError : PintError {
  using PintError::PintError;
};

// Input is coherent but outside the implemented classification
// (e.g. odd-conductor characters of a ramified quadratic extension, or the
// dim > 1 minimal-type case of the inert/odd branch).
struct UnsupportedCase : PintError {
  using PintError::PintError;
};

// Period integrals are only implemented over a ramified quadratic torus.
struct UnramifiedUnsupported : PintError {
  using PintError::PintError;
};

// The torus character and the central character of the representation do not
// cancel on F^x, so the period pairing is identically meaningless.
struct IncompatibleCentralCharacter : PintError {
  using PintError::PintError;
};

// No normalized (trace-zero) additive parameter exists for the character in
// its ambiguity class; downstream formulas would be ill-defined.
struct AlphaNotFound : PintError {
  using PintError::PintError;
};

// Character table construction from generator values failed: the generators
// do not generate the unit quotient, or the assigned values are inconsistent
// with the group law.
struct InconsistentTable : PintError {
  using PintError::PintError;
};

// A cyclotomic computation needs a root-of-unity order above the configured
// cap.  The default cap is chosen so this indicates misuse, not bad luck.
struct OrderBudgetExceeded : PintError {
  using PintError::PintError;
};

// Adaptive refinement hit its budget without two consecutive levels of the
// sum agreeing exactly.
struct UnstableSum : PintError {
  using PintError::PintError;
};

// A closed-form prediction was requested outside the hypotheses under which
// it holds (wrong extension type, conductor out of range, odd gap).  The
// direct computation is still available; only the shortcut is refused.
struct HypothesisViolation : PintError {
  using PintError::PintError;
};

// An evaluation point that a formula requires to carry a nonzero coefficient
// value turned out to lie outside the support.
struct NotOnSupport : PintError {
  using PintError::PintError;
};

// A residue-class precondition on a worked example's prime is not satisfied
// (the construction only applies to specific classes).
struct BadResidue : PintError {
  using PintError::PintError;
};

// Serialized character cache has the wrong magic or version.
struct CacheVersionMismatch : PintError {
  using PintError::PintError;
};

// Bad CLI flags / config file contents.
struct ConfigError : PintError {
  using PintError::PintError;
};

// A "cannot happen" invariant failed.  Always a library bug.
struct InternalError : PintError {
  using PintError::PintError;
};

namespace detail {
[[noreturn]] inline void check_fail(const char* expr, const char* file,
                                    int line, const std::string& msg) {
  std::ostringstream os;
  os << "invariant failed: " << expr << " at " << file << ':' << line;
  if (!msg.empty()) os << " (" << msg << ')';
  throw InternalError(os.str());
}
}  // namespace detail

}  // namespace pint

#define PINT_CHECK(cond)                                               \
  do {                                                                 \
    if (!(cond)) ::pint::detail::check_fail(#cond, __FILE__, __LINE__, \
                                            std::string());            \
  } while (0)

#define PINT_CHECK_MSG(cond, msg)                                      \
  do {                                                                 \
    if (!(cond)) ::pint::detail::check_fail(#cond, __FILE__, __LINE__, \
                                            (msg));                    \
  } while (0)
