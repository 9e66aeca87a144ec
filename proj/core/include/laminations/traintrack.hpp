#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laminations/exactmath.hpp"
#include "laminations/exterior.hpp"

namespace laminations {

// A generic (trivalent) switch: the two branches on the pair side meet the
// one on the single side, imposing weight(s1) + weight(s2) = weight(single).
// The pair is ordered; the order orients the switch's contribution to the
// symplectic form.
struct Switch {
  int s1 = -1, s2 = -1, single = -1;  // indices into TrainTrack::branches
};

// Combinatorial train track: named branches plus trivalent switches.
// Invariant (checked by parse_track): every branch has exactly two endpoints
// counted over all switch slots.
struct TrainTrack {
  std::string name;
  std::optional<int> genus, punctures;  // optional surface metadata
  std::vector<std::string> branches;
  std::vector<Switch> switches;

  int branch_index(const std::string& name) const;  // -1 when absent
};

// Reads a track from its JSON text. Schema: object with keys
//   name (string), genus (int, optional), punctures (int, optional),
//   branches (array of distinct strings),
//   switches (array of { "pair": [s1, s2], "single": s }).
// Unknown keys are rejected. Throws SyntaxError (with byte position for
// malformed JSON), UnknownBranch, NonTrivalentSwitch (pair size != 2),
// EndpointCountViolation.
TrainTrack parse_track(const std::string& text);
TrainTrack parse_track_file(const std::string& path);

// One row per switch over the branch coordinates: +1 on each pair slot,
// -1 on the single slot, accumulated (a branch filling several slots of one
// switch adds up).
IntMatrix switch_matrix(const TrainTrack& t);

// Solution cone data: W(t) = kernel of the switch system over Q.
struct WeightSpace {
  int ambient_dim = 0;  // number of branches
  RatMatrix basis;      // columns span W
  int dim() const { return basis.cols; }
};

// Lattice of integral weights: W(t) ∩ Z^branches, always saturated.
struct IntegralLattice {
  int ambient_dim = 0;
  IntMatrix basis;  // columns, column_hermite canonical form
  int rank() const { return basis.cols; }
};

// Kernel of switch_matrix over Q. When genus/punctures metadata is present,
// throws DimensionMismatch unless dim W = 6g - 6 + 2n.
WeightSpace weight_space(const TrainTrack& t);

// Kernel of switch_matrix over Z.
IntegralLattice integral_lattice(const TrainTrack& t);

// The symplectic form on branch space: one half d(s1) ^ d(s2) per switch.
TwoForm thurston_form(const TrainTrack& t);

// The form pulled back to the integral lattice basis B: B^T A B for
// A = to_skew_matrix(thurston_form). Throws OddDimension when dim W is odd
// and DegenerateForm when the restriction is singular.
RatMatrix restricted_form(const TrainTrack& t);

// Whether the column span of `basis` contains a point with every coordinate
// strictly positive (Fourier-Motzkin elimination on the strict homogeneous
// system). A zero-dimensional span has no positive point.
bool positive_point_in_span(const RatMatrix& basis);

// Whether some weight vector is strictly positive on every branch, i.e. the
// track is recurrent enough to carry an honest measured lamination chart.
bool has_positive_point(const TrainTrack& t);

}  // namespace laminations
