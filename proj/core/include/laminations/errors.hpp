#pragma once

#include <stdexcept>
#include <string>

namespace laminations {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- exact linear algebra ---------------------------------------------------

// Matrix handed to pfaffian() is not skew-symmetric.
struct NotSkew : Error { using Error::Error; };
// Operation needs an even-dimensional space (Pfaffian, restricted form).
struct OddDimension : Error { using Error::Error; };
// Gram determinant of a column-dependent matrix.
struct RankDeficient : Error { using Error::Error; };
// sublattice_index: the candidate sublattice is not contained in the ambient
// lattice (or lands outside it after solving).
struct NotASublattice : Error { using Error::Error; };
// sublattice_index: ranks differ, so the index would be infinite.
struct RankMismatch : Error { using Error::Error; };

// --- exterior algebra / forms ------------------------------------------------

// Operands live over different coordinate dimensions.
struct DimensionMismatch : Error { using Error::Error; };
// divides_out() against the zero covector.
struct ZeroCovector : Error { using Error::Error; };
// Restricted two-form is singular where a symplectic form is required.
struct DegenerateForm : Error { using Error::Error; };

// --- track files ---------------------------------------------------------

// Malformed track file (bad JSON, wrong shape, unknown keys, duplicates).
struct SyntaxError : Error { using Error::Error; };
// A switch references a branch name that is not declared.
struct UnknownBranch : Error { using Error::Error; };
// Some branch does not have exactly two endpoints on switches.
struct EndpointCountViolation : Error { using Error::Error; };
// A switch with other than two branches on its pair side.
struct NonTrivalentSwitch : Error { using Error::Error; };

// --- surface family --------------------------------------------------------

// Step applied to a model outside the step's chain.
struct WrongChain : Error { using Error::Error; };
// No model exists for the requested (genus, punctures).
struct UnsupportedSurface : Error { using Error::Error; };
// Exterior-algebra cross-check refused: post-step dimension too large.
struct OracleTooLarge : Error { using Error::Error; };

// --- measures ----------------------------------------------------------------

// Ratio formula evaluated on a non-hyperbolic surface type.
struct NonHyperbolic : Error { using Error::Error; };

}  // namespace laminations
