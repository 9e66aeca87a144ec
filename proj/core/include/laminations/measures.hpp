#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laminations/builtins.hpp"
#include "laminations/family.hpp"
#include "laminations/traintrack.hpp"

namespace laminations {

// The chart carries two natural volumes: the symplectic one (from the
// restricted form) and the counting one (from the integral lattice). Their
// ratio is |Pf| of the form written on a lattice basis.

// |Pf(B^T A B)| for the lattice basis B. Throws DimensionMismatch when the
// skew matrix does not act on the lattice's ambient space, OddDimension for
// odd rank, DegenerateForm when the restriction is singular. Rank 0 gives 1.
Rational ratio_of(const RatMatrix& skew, const IntegralLattice& lattice);

// Closed form 2^(2g+n-3). Throws NonHyperbolic when 2g - 2 + n <= 0.
Rational expected_ratio(int g, int n);

enum class Verdict { OK, Mismatch, NA };

struct RatioReport {
  std::string source;        // builtin/track name; empty for family queries
  std::optional<int> g, n;
  int dim = 0;
  Rational pfaffian;         // signed, on the canonical lattice basis
  Rational ratio;            // |pfaffian|
  std::optional<Rational> expected;
  Verdict verdict = Verdict::NA;  // OK/Mismatch iff expected is present
};

// One deterministic "key=value" line:
//   [source=S] [g=G n=N] dim=D pf=P ratio=R expected=E|? verdict=OK|MISMATCH|N/A
std::string render(const RatioReport& r);

RatioReport model_report(const CoordModel& m, const std::string& source = "");
RatioReport track_report(const TrainTrack& t, const std::string& source);
RatioReport builtin_report(const std::string& name);  // Error if unknown

// Squared covolumes of the two sigma04 track lattices; they demonstrate that
// the integral normalization is chart-dependent while the symplectic ratio
// is not (both tracks give ratio 2).
struct EuclidDemo {
  Integer tau;       // gram determinant for sigma04-tau
  Integer tauprime;  // gram determinant for sigma04-tauprime
  bool distinct;
};
EuclidDemo euclid_demo();
// Rendered demo: pinned header line plus two truncated 12-digit square roots
// computed with integer arithmetic.
std::vector<std::string> euclid_demo_lines();

// Every hyperbolic (g, n) with complexity 3g - 3 + n <= max_complexity:
// supported types produce a report (in (g, n) lexicographic order), the
// unsupported hyperbolic leftovers (0,3), (0,4), (1,1) are listed as skipped.
struct SweepResult {
  std::vector<RatioReport> reports;
  std::vector<std::pair<int, int>> skipped;
};
SweepResult sweep(int max_complexity);

}  // namespace laminations
