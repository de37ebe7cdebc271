#pragma once

#include <string>
#include <vector>

#include "gstark/padic.hpp"

namespace gstark {

// Univariate polynomial over Q, coefficients low degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Polynomial variable();

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(long i) const { return i < static_cast<long>(c_.size()) ? c_[i] : Rational(0); }
  Rational evaluate(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  // quotient and remainder
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  static Polynomial gcd(Polynomial a, Polynomial b);  // monic
  Polynomial scaled(const Rational& s) const;
  std::string to_string(const std::string& var = "L") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
inline Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

// Element of Q(L), kept reduced with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction variable();

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // value at a rational point; throws DomainError at a pole
  Rational evaluate(const Rational& x) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_ = Polynomial(Rational(1));
};

inline RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
inline RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
inline RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
inline RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }

}  // namespace gstark
