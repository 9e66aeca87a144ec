#pragma once

#include <cassert>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "laminations/rational.hpp"

namespace laminations {

// Dense row-major matrices. Kernel bases and lattice bases are stored as
// matrices whose *columns* are the basis vectors.

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Integer> a;  // rows * cols entries, row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
    assert(r >= 0 && c >= 0);
  }

  Integer& at(int i, int j) {
    assert(0 <= i && i < rows && 0 <= j && j < cols);
    return a[static_cast<size_t>(i) * cols + j];
  }
  const Integer& at(int i, int j) const {
    assert(0 <= i && i < rows && 0 <= j && j < cols);
    return a[static_cast<size_t>(i) * cols + j];
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  std::vector<Integer> column(int j) const {
    std::vector<Integer> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    assert(x.cols == y.rows);
    IntMatrix p(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const Integer& xik = x.at(i, k);
        if (xik == 0) continue;
        for (int j = 0; j < y.cols; ++j) p.at(i, j) += xik * y.at(k, j);
      }
    return p;
  }
};

struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
    assert(r >= 0 && c >= 0);
  }

  Rational& at(int i, int j) {
    assert(0 <= i && i < rows && 0 <= j && j < cols);
    return a[static_cast<size_t>(i) * cols + j];
  }
  const Rational& at(int i, int j) const {
    assert(0 <= i && i < rows && 0 <= j && j < cols);
    return a[static_cast<size_t>(i) * cols + j];
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  RatMatrix transposed() const {
    RatMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    assert(x.cols == y.rows);
    RatMatrix p(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const Rational& xik = x.at(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < y.cols; ++j)
          p.at(i, j) += xik * y.at(k, j);
      }
    return p;
  }
};

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = Rational(m.at(i, j));
  return r;
}

// Debug/diagnostic rendering: one space-separated row per line.
inline std::string to_string(const IntMatrix& m) {
  std::string s;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) s += ' ';
      s += m.at(i, j).get_str();
    }
    s += '\n';
  }
  return s;
}
inline std::string to_string(const RatMatrix& m) {
  std::string s;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) s += ' ';
      s += m.at(i, j).to_string();
    }
    s += '\n';
  }
  return s;
}

}  // namespace laminations
