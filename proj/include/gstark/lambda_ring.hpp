#pragma once

#include <vector>

#include "gstark/padic.hpp"

namespace gstark {

// Element of Q_p[[T]] truncated after T^M.  Elements of the Iwasawa algebra
// have integral coefficients; the truncation bound used by nu_k relies on it.
class LambdaElement {
 public:
  LambdaElement(long p, long truncation);  // zero
  static LambdaElement constant(const PadicNumber& c, long truncation);
  static LambdaElement variable(long p, long truncation, long precision);  // T
  static LambdaElement from_coefficients(std::vector<PadicNumber> coeffs);

  long prime() const { return p_; }
  long truncation() const { return static_cast<long>(c_.size()) - 1; }
  const PadicNumber& coeff(long i) const { return c_.at(i); }
  PadicNumber& coeff(long i) { return c_.at(i); }
  const std::vector<PadicNumber>& coefficients() const { return c_; }

  LambdaElement& operator+=(const LambdaElement& o);
  LambdaElement& operator-=(const LambdaElement& o);
  LambdaElement operator*(const LambdaElement& o) const;
  LambdaElement& operator*=(const PadicNumber& s);

 private:
  long p_ = 0;
  std::vector<PadicNumber> c_;
};

inline LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
inline LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }

// u = 1 + p, the topological generator of 1 + p Z_p
inline long generator_u(long p) { return 1 + p; }
PadicNumber log_u(long p, long precision);

// nu_k(h) = h(u^(k-1) - 1).  The result precision is capped by the truncation
// error |T|^(M+1) at T = u^(k-1) - 1.
PadicNumber nu_k(const LambdaElement& h, long k);
PadicNumber nu_k(const LambdaElement& h, const PadicNumber& k);

// epsilon(x) = (1 + T)^alpha with alpha = log<x> / log u, for x prime to p.
LambdaElement epsilon_char(const Integer& x, long p, long truncation, long precision);

struct PiNormalized {
  long order = 0;          // n with h = pi^n h', pi = T / log u
  LambdaElement unit_part;  // h' = (log u)^n * (h / T^n)
  // nu_1(h') = (log u)^n c_n
  PadicNumber leading_value() const;
};

PiNormalized pi_normalize(const LambdaElement& h);

// Delta^n f(1) / (delta^n n!) with f(k) = nu_k(h), delta = p^m.  Agrees with
// nu_1(h') to O(p^m) when h has pi-order n.
PadicNumber leading_term_difference(const LambdaElement& h, long n, long m);

}  // namespace gstark
