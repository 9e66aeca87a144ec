#pragma once

#include <map>
#include <vector>

#include "laminations/matrix.hpp"

namespace laminations {

// Exterior algebra over Q on a fixed coordinate space. Elements are kept in
// canonical form: terms keyed by strictly increasing index tuples, zero
// coefficients dropped. std::map keys give a deterministic term order.

class MultiVector {
 public:
  MultiVector() = default;
  explicit MultiVector(int dim) : dim_(dim) {}

  static MultiVector scalar(int dim, const Rational& c);
  // Degree-1 element u_0 e_0 + ... + u_{dim-1} e_{dim-1}.
  static MultiVector covector(const std::vector<Rational>& u);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  // Coefficient of a strictly increasing tuple (0-based indices).
  Rational coefficient(const std::vector<int>& tuple) const;

  // Adds c * e_idx, canonicalizing: sorts idx counting the sign, drops the
  // term when an index repeats or the merged coefficient cancels.
  void add_term(std::vector<int> idx, Rational c);

  MultiVector& operator+=(const MultiVector& o);
  MultiVector& operator-=(const MultiVector& o);
  MultiVector& operator*=(const Rational& c);
  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(const Rational& c, MultiVector m) { return m *= c; }

  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  int dim_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

// Graded product. Throws DimensionMismatch when the operands live over
// different coordinate spaces.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

// Formal sum of decomposable two-forms: sum of coeff * d(u) ^ d(v) with u, v
// covectors over a fixed coordinate space of dimension dim.
struct TwoForm {
  struct Term {
    Rational coeff;
    std::vector<Rational> u, v;
  };
  int dim = 0;
  std::vector<Term> terms;
};

// The matrix A with A[i][j] = form(e_i, e_j): sum of coeff * (u v^T - v u^T).
// Throws DimensionMismatch when a term's covectors have the wrong length.
RatMatrix to_skew_matrix(const TwoForm& f);

// The form as a degree-2 element of the exterior algebra.
MultiVector expand(const TwoForm& f);

// k-fold wedge of the form with itself by a plain left fold; k = 0 gives the
// scalar 1. Vanishes identically for k > dim/2.
MultiVector wedge_power(const TwoForm& f, int k);

// Coefficient of e_0 ^ e_1 ^ ... ^ e_{dim-1}.
Rational top_coefficient(const MultiVector& m);

// Whether m = d(u) ^ w for some w, decided exactly in an adapted basis whose
// last direction is u. Throws ZeroCovector when u = 0. The zero multivector
// is divisible by everything.
bool divides_out(const MultiVector& m, const std::vector<Rational>& u);

}  // namespace laminations
