#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>

#include "gstark/errors.hpp"

namespace gstark {

using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(long base, long exp);
// v_p(a) for a != 0.
long valuation(const Integer& a, long p);
long valuation(const Rational& q, long p);
bool is_prime(long n);
// largest e with p^e <= n, for n >= 1
long floor_log(long n, long p);
// v_p(n!)
long factorial_valuation(long n, long p);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// An element of Q_p known modulo p^N (N = absolute precision).
//
// Nonzero values are stored as p^v * u with u a unit taken mod p^(N - v).
// A value that is zero to its precision is O(p^N) and reports valuation N.
// Exact zero is the only value with unbounded precision.
class PadicNumber {
 public:
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  PadicNumber() = default;

  static PadicNumber exact_zero(long p);
  static PadicNumber zero(long p, long abs_precision);
  static PadicNumber from_integer(long p, const Integer& a, long abs_precision);
  static PadicNumber from_rational(long p, const Rational& q, long abs_precision);
  static PadicNumber one(long p, long abs_precision) { return from_integer(p, 1, abs_precision); }

  long prime() const { return p_; }
  long valuation() const { return v_; }
  long precision() const { return n_; }
  long relative_precision() const;
  const Integer& unit() const { return unit_; }
  bool is_exact_zero() const { return exact_zero_; }
  bool is_zero() const { return exact_zero_ || unit_ == 0; }
  bool is_unit() const { return !is_zero() && v_ == 0; }

  // Drops digits so that the precision is at most n.
  PadicNumber with_precision(long n) const;
  // Representative in [0, p^N); requires valuation >= 0.
  Integer residue() const;
  std::string to_string() const;

  PadicNumber operator-() const;
  PadicNumber& operator+=(const PadicNumber& o);
  PadicNumber& operator-=(const PadicNumber& o);
  PadicNumber& operator*=(const PadicNumber& o);
  PadicNumber& operator/=(const PadicNumber& o);
  // Exact scaling by an integer.
  PadicNumber& operator*=(const Integer& c);
  PadicNumber& operator/=(const Integer& c);
  PadicNumber& operator*=(long c) { return *this *= Integer(c); }
  PadicNumber& operator/=(long c) { return *this /= Integer(c); }

  PadicNumber inverse() const;
  PadicNumber pow(long e) const;

 private:
  static PadicNumber normalized(long p, long v, Integer value, long n);
  long common_prime(const PadicNumber& o) const;

  long p_ = 0;
  long v_ = kExact;
  long n_ = kExact;
  Integer unit_ = 0;
  bool exact_zero_ = true;
};

inline PadicNumber operator+(PadicNumber a, const PadicNumber& b) { return a += b; }
inline PadicNumber operator-(PadicNumber a, const PadicNumber& b) { return a -= b; }
inline PadicNumber operator*(PadicNumber a, const PadicNumber& b) { return a *= b; }
inline PadicNumber operator/(PadicNumber a, const PadicNumber& b) { return a /= b; }
inline PadicNumber operator*(PadicNumber a, const Integer& c) { return a *= c; }
inline PadicNumber operator*(const Integer& c, PadicNumber a) { return a *= c; }
inline PadicNumber operator/(PadicNumber a, const Integer& c) { return a /= c; }
inline PadicNumber operator*(PadicNumber a, long c) { return a *= c; }
inline PadicNumber operator*(long c, PadicNumber a) { return a *= c; }
inline PadicNumber operator/(PadicNumber a, long c) { return a /= c; }

inline bool is_zero(const PadicNumber& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

// v_p(a - b), capped by the precision of the difference.
long discrepancy_valuation(const PadicNumber& a, const PadicNumber& b);
// True when a and b are both known to precision m and agree mod p^m.
bool equal_to_precision(const PadicNumber& a, const PadicNumber& b, long m);

// Iwasawa logarithm, normalized by log_p(p) = 0.
PadicNumber plog(const PadicNumber& x);
// exp on p Z_p (p odd).
PadicNumber pexp(const PadicNumber& x);
PadicNumber teichmuller(const Integer& a, long p, long n);
// <a> = a / omega(a)
PadicNumber angle_bracket(const Integer& a, long p, long n);
// Square root of a in Z_p for p not dividing a.  Of the two roots the one whose
// least residue mod p is smaller is returned.
PadicNumber hensel_sqrt(const Integer& a, long p, long n);
// binom(x, k) for x in Z_p
PadicNumber binomial(const PadicNumber& x, long k);

}  // namespace gstark
