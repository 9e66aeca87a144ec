#pragma once

#include <vector>

#include "laminations/matrix.hpp"

namespace laminations {

// Exact linear algebra over Q and Z. All routines are deterministic: pivot
// searches take the first admissible entry, never the numerically largest.

// Rank over Q by Gaussian elimination.
int rational_rank(const RatMatrix& m);

// Basis of { x : m x = 0 } as columns.
// Canonical shape: one column per free variable in increasing column order;
// the free coordinate itself carries 1, pivot coordinates carry the solved
// values, other free coordinates 0.
RatMatrix rational_kernel(const RatMatrix& m);

// Basis of { x in Z^c : m x = 0 } as columns. The result is always a basis
// of a saturated lattice (it is the kernel of a Z-linear map), canonicalized
// by column Hermite form.
IntMatrix integer_kernel(const IntMatrix& m);

// Column-style Hermite normal form of the lattice spanned by the columns:
// zero columns dropped, pivot rows strictly increasing (lower-triangular
// shape), pivots positive, entries left of a pivot reduced into [0, pivot).
// Two integer matrices span the same column lattice iff their Hermite forms
// are identical.
IntMatrix column_hermite(const IntMatrix& m);

// Nonzero diagonal of the Smith normal form: d1 | d2 | ... | dk, all > 0.
std::vector<Integer> invariant_factors(const IntMatrix& m);

// Index [ambient : sub] of one lattice in another, both given by column
// bases over the same ambient space. Throws RankMismatch when the ranks
// differ (infinite index) and NotASublattice when sub is not contained in
// ambient.
Integer sublattice_index(const IntMatrix& sub, const IntMatrix& ambient);

// Smallest saturated lattice containing the column span: span_Q(m) ∩ Z^rows.
// Requires nothing beyond integrality; returns a column_hermite basis.
IntMatrix saturate(const IntMatrix& m);

// Determinant by exact Gaussian elimination. 0x0 determinant is 1.
Rational determinant(const RatMatrix& m);

// Pfaffian of a skew-symmetric matrix by congruence elimination
// (Pf(E^T A E) = det(E) Pf(A)). 0x0 Pfaffian is 1. Throws OddDimension /
// NotSkew.
Rational pfaffian(const RatMatrix& m);

// det(B^T B) of an integer matrix whose columns are independent; this is the
// squared covolume of the lattice the columns span. Throws RankDeficient
// when the columns are dependent. No columns -> 1.
Integer gram_det(const IntMatrix& b);

}  // namespace laminations
