#include "laminations/exactmath.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace laminations {

namespace {

// Row echelon form in place. Returns the pivot columns in order; pivot rows
// are 0..k-1 after the call (rows are swapped, not scaled).
std::vector<int> row_echelon(RatMatrix& m) {
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    for (int i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c) / m.at(r, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

// Reduced form: pivots scaled to 1, entries above pivots cleared.
void back_substitute(RatMatrix& m, const std::vector<int>& pivot_cols) {
  for (int r = static_cast<int>(pivot_cols.size()) - 1; r >= 0; --r) {
    int c = pivot_cols[r];
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < r; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
  }
}

void negate_column(IntMatrix& m, int j) {
  for (int i = 0; i < m.rows; ++i) m.at(i, j) = -m.at(i, j);
}

void swap_columns(IntMatrix& m, int j, int k) {
  if (j == k) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, j), m.at(i, k));
}

// col_j -= t * col_k
void add_column(IntMatrix& m, int j, int k, const Integer& t) {
  if (t == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, j) -= t * m.at(i, k);
}

}  // namespace

int rational_rank(const RatMatrix& m) {
  RatMatrix w = m;
  return static_cast<int>(row_echelon(w).size());
}

RatMatrix rational_kernel(const RatMatrix& m) {
  RatMatrix w = m;
  std::vector<int> pivot_cols = row_echelon(w);
  back_substitute(w, pivot_cols);

  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RatMatrix k(m.cols, static_cast<int>(free_cols.size()));
  for (int j = 0; j < k.cols; ++j) {
    int f = free_cols[j];
    k.at(f, j) = 1;
    for (int r = 0; r < static_cast<int>(pivot_cols.size()); ++r)
      k.at(pivot_cols[r], j) = -w.at(r, f);
  }
  return k;
}

IntMatrix column_hermite(const IntMatrix& m) {
  IntMatrix h = m;
  int pcol = 0;  // next column to place a pivot in
  for (int row = 0; row < h.rows && pcol < h.cols; ++row) {
    // Repeated gcd elimination across the active columns [pcol, cols).
    for (;;) {
      int p = -1;
      for (int j = pcol; j < h.cols; ++j) {
        if (h.at(row, j) == 0) continue;
        if (p < 0 || cmp(abs(h.at(row, j)), abs(h.at(row, p))) < 0) p = j;
      }
      if (p < 0) break;  // row is zero on the active part
      int nonzero = 0;
      for (int j = pcol; j < h.cols; ++j)
        if (h.at(row, j) != 0) ++nonzero;
      if (nonzero == 1) {
        swap_columns(h, pcol, p);
        if (h.at(row, pcol) < 0) negate_column(h, pcol);
        // Reduce the entries left of the pivot into [0, pivot). Columns with
        // earlier pivots have zeros in this row's predecessors, so earlier
        // rows are untouched.
        const Integer& piv = h.at(row, pcol);
        for (int j = 0; j < pcol; ++j) {
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(), piv.get_mpz_t());
          add_column(h, j, pcol, q);
        }
        ++pcol;
        break;
      }
      for (int j = pcol; j < h.cols; ++j) {
        if (j == p || h.at(row, j) == 0) continue;
        Integer q;
        // Truncated quotient: strictly shrinks |h(row, j)|.
        mpz_tdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(),
                   h.at(row, p).get_mpz_t());
        add_column(h, j, p, q);
      }
    }
  }
  // Drop the all-zero tail columns (everything at and after pcol is zero).
  IntMatrix out(h.rows, pcol);
  for (int i = 0; i < h.rows; ++i)
    for (int j = 0; j < pcol; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Column elimination m -> m U with U unimodular; the columns of U whose
  // image column became zero form a basis of the kernel, automatically
  // saturated.
  IntMatrix w = m;
  IntMatrix u = IntMatrix::identity(m.cols);
  int fixed = 0;  // columns [0, fixed) hold already-used pivots
  for (int row = 0; row < w.rows && fixed < w.cols; ++row) {
    for (;;) {
      int p = -1;
      for (int j = fixed; j < w.cols; ++j) {
        if (w.at(row, j) == 0) continue;
        if (p < 0 || cmp(abs(w.at(row, j)), abs(w.at(row, p))) < 0) p = j;
      }
      if (p < 0) break;
      int nonzero = 0;
      for (int j = fixed; j < w.cols; ++j)
        if (w.at(row, j) != 0) ++nonzero;
      if (nonzero == 1) {
        swap_columns(w, fixed, p);
        swap_columns(u, fixed, p);
        ++fixed;
        break;
      }
      for (int j = fixed; j < w.cols; ++j) {
        if (j == p || w.at(row, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), w.at(row, j).get_mpz_t(),
                   w.at(row, p).get_mpz_t());
        add_column(w, j, p, q);
        add_column(u, j, p, q);
      }
    }
  }
  // Active columns of w are zero; the matching columns of u span the kernel.
  IntMatrix basis(m.cols, w.cols - fixed);
  for (int i = 0; i < m.cols; ++i)
    for (int j = fixed; j < w.cols; ++j) basis.at(i, j - fixed) = u.at(i, j);
  return column_hermite(basis);
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  IntMatrix w = m;
  std::vector<Integer> factors;
  int t = 0;
  const int nmin = std::min(w.rows, w.cols);
  while (t < nmin) {
    // Locate the smallest nonzero entry of the trailing block.
    int bi = -1, bj = -1;
    for (int i = t; i < w.rows; ++i)
      for (int j = t; j < w.cols; ++j) {
        if (w.at(i, j) == 0) continue;
        if (bi < 0 || cmp(abs(w.at(i, j)), abs(w.at(bi, bj))) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;  // trailing block is zero
    if (bi != t)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(bi, j), w.at(t, j));
    if (bj != t)
      for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, bj), w.at(i, t));
    if (w.at(t, t) < 0)
      for (int j = t; j < w.cols; ++j) w.at(t, j) = -w.at(t, j);

    bool clean = true;
    for (int i = t + 1; i < w.rows; ++i) {
      if (w.at(i, t) == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), w.at(i, t).get_mpz_t(), w.at(t, t).get_mpz_t());
      for (int j = t; j < w.cols; ++j) w.at(i, j) -= q * w.at(t, j);
      if (w.at(i, t) != 0) clean = false;  // remainder smaller than pivot
    }
    for (int j = t + 1; j < w.cols; ++j) {
      if (w.at(t, j) == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), w.at(t, j).get_mpz_t(), w.at(t, t).get_mpz_t());
      for (int i = t; i < w.rows; ++i) w.at(i, j) -= q * w.at(i, t);
      if (w.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // pivot shrank; repeat with the new minimum

    // Pivot must divide the whole trailing block for the divisibility chain.
    bool divides_all = true;
    for (int i = t + 1; i < w.rows && divides_all; ++i)
      for (int j = t + 1; j < w.cols; ++j)
        if (w.at(i, j) % w.at(t, t) != 0) {
          // Fold that row in; the next sweep shrinks the pivot.
          for (int jj = t; jj < w.cols; ++jj) w.at(t, jj) += w.at(i, jj);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;

    factors.push_back(w.at(t, t));
    ++t;
  }
  return factors;
}

Integer sublattice_index(const IntMatrix& sub, const IntMatrix& ambient) {
  assert(sub.rows == ambient.rows);
  const int rank_sub = rational_rank(to_rational(sub));
  const int rank_amb = rational_rank(to_rational(ambient));
  if (rank_sub != static_cast<int>(sub.cols) ||
      rank_amb != static_cast<int>(ambient.cols))
    throw RankMismatch("sublattice_index: basis columns are dependent");
  if (rank_sub != rank_amb)
    throw RankMismatch("sublattice_index: ranks differ (index is infinite)");

  // Solve ambient * C = sub over Q; C must come out integral.
  RatMatrix aug(ambient.rows, ambient.cols + sub.cols);
  for (int i = 0; i < ambient.rows; ++i) {
    for (int j = 0; j < ambient.cols; ++j) aug.at(i, j) = Rational(ambient.at(i, j));
    for (int j = 0; j < sub.cols; ++j)
      aug.at(i, ambient.cols + j) = Rational(sub.at(i, j));
  }
  std::vector<int> pivot_cols = row_echelon(aug);
  for (int c : pivot_cols)
    if (c >= ambient.cols)
      throw NotASublattice("sublattice_index: sub is not contained in ambient");
  back_substitute(aug, pivot_cols);

  IntMatrix coeff(ambient.cols, sub.cols);
  for (int r = 0; r < static_cast<int>(pivot_cols.size()); ++r)
    for (int j = 0; j < sub.cols; ++j) {
      const Rational& v = aug.at(r, ambient.cols + j);
      if (!v.is_integer())
        throw NotASublattice("sublattice_index: coordinates are not integral");
      coeff.at(pivot_cols[r], j) = v.numerator();
    }

  Integer index = 1;
  for (const Integer& d : invariant_factors(coeff)) index *= d;
  return index;
}

IntMatrix saturate(const IntMatrix& m) {
  // span_Q(m) ∩ Z^rows is the integer kernel of any integer matrix whose
  // rational kernel is span_Q(m): take the orthogonal complement twice.
  RatMatrix complement = rational_kernel(to_rational(m.transposed()));
  IntMatrix rows(complement.cols, m.rows);  // complement columns, as rows
  for (int j = 0; j < complement.cols; ++j) {
    Integer lcm = 1;
    for (int i = 0; i < complement.rows; ++i) {
      Integer den = complement.at(i, j).denominator();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (int i = 0; i < complement.rows; ++i) {
      Rational scaled = complement.at(i, j) * Rational(lcm);
      rows.at(j, i) = scaled.to_integer();
    }
  }
  return integer_kernel(rows);
}

Rational determinant(const RatMatrix& m) {
  assert(m.rows == m.cols);
  RatMatrix w = m;
  Rational det = 1;
  for (int c = 0; c < w.cols; ++c) {
    int p = -1;
    for (int i = c; i < w.rows; ++i)
      if (!w.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(p, j), w.at(c, j));
      det = -det;
    }
    det *= w.at(c, c);
    for (int i = c + 1; i < w.rows; ++i) {
      if (w.at(i, c).is_zero()) continue;
      Rational f = w.at(i, c) / w.at(c, c);
      for (int j = c; j < w.cols; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  return det;
}

Rational pfaffian(const RatMatrix& m) {
  assert(m.rows == m.cols);
  const int n = m.rows;
  if (n % 2 != 0)
    throw OddDimension("pfaffian: dimension " + std::to_string(n) + " is odd");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (m.at(i, j) != -m.at(j, i))
        throw NotSkew("pfaffian: matrix is not skew-symmetric at (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");

  RatMatrix w = m;
  Rational result = 1;
  for (int k = 0; k + 1 < n; k += 2) {
    // Want w(k, k+1) != 0; search row k past the diagonal, first hit wins.
    int p = -1;
    for (int j = k + 1; j < n; ++j)
      if (!w.at(k, j).is_zero()) { p = j; break; }
    if (p < 0) return Rational(0);  // row k is zero: Pfaffian vanishes
    if (p != k + 1) {
      // Congruence by a transposition: flips the sign.
      for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(k + 1, j));
      for (int i = 0; i < n; ++i) std::swap(w.at(i, p), w.at(i, k + 1));
      result = -result;
    }
    const Rational piv = w.at(k, k + 1);
    // Clear the rest of row k (and column k) with congruence shears; the
    // expansion along row k then reduces to piv * Pf(minor).
    for (int j = k + 2; j < n; ++j) {
      if (w.at(k, j).is_zero()) continue;
      Rational f = w.at(k, j) / piv;
      for (int i = 0; i < n; ++i) w.at(i, j) -= f * w.at(i, k + 1);
      for (int jj = 0; jj < n; ++jj) w.at(j, jj) -= f * w.at(k + 1, jj);
    }
    result *= piv;
  }
  return result;
}

Integer gram_det(const IntMatrix& b) {
  IntMatrix gram = b.transposed() * b;
  Rational det = determinant(to_rational(gram));
  if (det.is_zero()) throw RankDeficient("gram_det: columns are dependent");
  return det.to_integer();
}

}  // namespace laminations
