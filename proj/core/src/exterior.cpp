#include "laminations/exterior.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

#include "laminations/errors.hpp"

namespace laminations {

MultiVector MultiVector::scalar(int dim, const Rational& c) {
  MultiVector m(dim);
  m.add_term({}, c);
  return m;
}

MultiVector MultiVector::covector(const std::vector<Rational>& u) {
  MultiVector m(static_cast<int>(u.size()));
  for (int i = 0; i < m.dim_; ++i) m.add_term({i}, u[i]);
  return m;
}

Rational MultiVector::coefficient(const std::vector<int>& tuple) const {
  auto it = terms_.find(tuple);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiVector::add_term(std::vector<int> idx, Rational c) {
  if (c.is_zero()) return;
  // Insertion sort, counting transpositions for the sign.
  bool negative = false;
  for (size_t i = 1; i < idx.size(); ++i) {
    int v = idx[i];
    size_t j = i;
    while (j > 0 && idx[j - 1] > v) {
      idx[j] = idx[j - 1];
      --j;
      negative = !negative;
    }
    idx[j] = v;
  }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return;  // repeated direction: term vanishes
  assert(idx.empty() || (idx.front() >= 0 && idx.back() < dim_));
  if (negative) c = -c;
  auto [it, inserted] = terms_.try_emplace(std::move(idx), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
  if (dim_ != o.dim_)
    throw DimensionMismatch("multivector sum: dim " + std::to_string(dim_) +
                            " vs " + std::to_string(o.dim_));
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
  if (dim_ != o.dim_)
    throw DimensionMismatch("multivector difference: dim " +
                            std::to_string(dim_) + " vs " +
                            std::to_string(o.dim_));
  for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
  return *this;
}

MultiVector& MultiVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, coeff] : terms_) coeff *= c;
  return *this;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("wedge: dim " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  MultiVector out(a.dim());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> idx;
      idx.reserve(ia.size() + ib.size());
      idx.insert(idx.end(), ia.begin(), ia.end());
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), ca * cb);
    }
  return out;
}

RatMatrix to_skew_matrix(const TwoForm& f) {
  RatMatrix a(f.dim, f.dim);
  for (const TwoForm::Term& t : f.terms) {
    if (static_cast<int>(t.u.size()) != f.dim ||
        static_cast<int>(t.v.size()) != f.dim)
      throw DimensionMismatch("to_skew_matrix: covector length vs dim " +
                              std::to_string(f.dim));
    for (int i = 0; i < f.dim; ++i) {
      if (t.u[i].is_zero() && t.v[i].is_zero()) continue;
      for (int j = 0; j < f.dim; ++j)
        a.at(i, j) += t.coeff * (t.u[i] * t.v[j] - t.v[i] * t.u[j]);
    }
  }
  return a;
}

MultiVector expand(const TwoForm& f) {
  MultiVector out(f.dim);
  for (const TwoForm::Term& t : f.terms) {
    if (static_cast<int>(t.u.size()) != f.dim ||
        static_cast<int>(t.v.size()) != f.dim)
      throw DimensionMismatch("expand: covector length vs dim " +
                              std::to_string(f.dim));
    for (int i = 0; i < f.dim; ++i) {
      if (t.u[i].is_zero()) continue;
      for (int j = 0; j < f.dim; ++j) {
        if (t.v[j].is_zero()) continue;
        out.add_term({i, j}, t.coeff * t.u[i] * t.v[j]);
      }
    }
  }
  return out;
}

MultiVector wedge_power(const TwoForm& f, int k) {
  assert(k >= 0);
  MultiVector acc = MultiVector::scalar(f.dim, 1);
  if (k == 0) return acc;
  const MultiVector step = expand(f);
  for (int i = 0; i < k; ++i) acc = wedge(acc, step);
  return acc;
}

Rational top_coefficient(const MultiVector& m) {
  std::vector<int> full(m.dim());
  for (int i = 0; i < m.dim(); ++i) full[i] = i;
  return m.coefficient(full);
}

bool divides_out(const MultiVector& m, const std::vector<Rational>& u) {
  if (static_cast<int>(u.size()) != m.dim())
    throw DimensionMismatch("divides_out: covector length " +
                            std::to_string(u.size()) + " vs dim " +
                            std::to_string(m.dim()));
  int p = -1;
  for (int i = 0; i < static_cast<int>(u.size()); ++i)
    if (!u[i].is_zero()) { p = i; break; }
  if (p < 0) throw ZeroCovector("divides_out: zero covector");
  if (m.is_zero()) return true;

  // Adapted basis: f_j = e_j for j != p (relabelled to fill 0..dim-2) and
  // f_{dim-1} = u. Then e_p = (f_{dim-1} - sum_{j != p} u_j f_j) / u_p, and
  // m is divisible by u iff every term of the rewritten m contains the last
  // direction.
  const int d = m.dim();
  const int last = d - 1;
  auto relabel = [&](int j) { return j < p ? j : j - 1; };
  MultiVector rewritten(d);
  for (const auto& [idx, c] : m.terms()) {
    auto pos = std::find(idx.begin(), idx.end(), p);
    if (pos == idx.end()) {
      std::vector<int> t(idx.size());
      for (size_t i = 0; i < idx.size(); ++i) t[i] = relabel(idx[i]);
      rewritten.add_term(std::move(t), c);
      continue;
    }
    const size_t slot = static_cast<size_t>(pos - idx.begin());
    std::vector<int> base(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) base[i] = relabel(idx[i]);
    base[slot] = last;
    rewritten.add_term(base, c / u[p]);
    for (int j = 0; j < d; ++j) {
      if (j == p || u[j].is_zero()) continue;
      std::vector<int> t(idx.size());
      for (size_t i = 0; i < idx.size(); ++i) t[i] = relabel(idx[i]);
      t[slot] = relabel(j);
      rewritten.add_term(std::move(t), -(c * u[j]) / u[p]);
    }
  }
  for (const auto& [idx, c] : rewritten.terms()) {
    (void)c;
    if (idx.empty() || idx.back() != last) return false;
  }
  return true;
}

}  // namespace laminations
