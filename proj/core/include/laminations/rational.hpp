#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "laminations/errors.hpp"

namespace laminations {

// Arbitrary-precision integer scalar.
using Integer = mpz_class;

// Arbitrary-precision rational, kept in canonical form: lowest terms,
// denominator > 0, zero represented as 0/1. mpq_class maintains the
// invariant for arithmetic; the two-argument constructor canonicalizes.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}    // NOLINT: implicit by design, literals mix in
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(const Integer& n) : v_(n) {}                  // NOLINT
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  Integer numerator() const { return Integer(v_.get_num()); }
  Integer denominator() const { return Integer(v_.get_den()); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Exact integer value; caller must know is_integer() holds.
  Integer to_integer() const {
    if (!is_integer()) throw Error("Rational: not an integer: " + to_string());
    return numerator();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

  // 2^e for e >= 0.
  static Rational pow2(unsigned long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return Rational(p);
  }

  // "p" when integral, "p/q" otherwise.
  std::string to_string() const {
    return is_integer() ? v_.get_num().get_str() : v_.get_str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

}  // namespace laminations
