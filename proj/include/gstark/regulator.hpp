#pragma once

#include <string>

#include "gstark/walgebra.hpp"

namespace gstark {

// A generator pi = (x + y sqrt(d)) / 2 of p^h for a split prime p of Q(sqrt(d)),
// embedded into Q_p through sqrt(d) -> w.  u = pi / conj(pi).
struct PUnitCertificate {
  long d = 0;
  long p = 0;
  long h = 0;
  Integer x, y;
  PadicNumber w;    // square root of d in Z_p
  long o = 0;       // ord_p(iota pi) - ord_p(iota conj pi)
  PadicNumber ell;  // plog(iota pi) - plog(iota conj pi)

  std::string to_json() const;
};

// Minimal h <= h_max with a primitive solution of x^2 - d y^2 = 4 p^h.
PUnitCertificate find_p_unit(long d, long p, long precision, long h_max = 24);

struct Measurement {
  long o = 0;
  PadicNumber ell;
};

// o(u) and ell(u) for the generator (x, y) under the embedding sqrt(d) -> w.
Measurement measure(long d, long p, const Integer& x, const Integer& y, const PadicNumber& w, long precision);
inline Measurement measure(const PUnitCertificate& c) {
  return measure(c.d, c.p, c.x, c.y, c.w, c.w.precision());
}

// The certificate with the other square root of d.
PUnitCertificate swap_root(const PUnitCertificate& c);

// -ell(u) / o(u)
PadicNumber gross_regulator_rank1(const PUnitCertificate& c);

// det(-ell) / det(o)
PadicNumber gross_regulator_general(const Matrix<Integer>& o, const Matrix<PadicNumber>& ell);

}  // namespace gstark
