#pragma once

#include <optional>
#include <vector>

#include "gstark/bernoulli.hpp"

namespace gstark {

// Truncated Taylor expansion sum_i c_i h^i in an increment h, with p-adic
// coefficients.
class Jet {
 public:
  Jet(long order, const PadicNumber& constant);
  static Jet variable(long order, const PadicNumber& value, long p, long precision);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const PadicNumber& operator[](long i) const { return c_[i]; }
  PadicNumber& operator[](long i) { return c_[i]; }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet operator*(const Jet& o) const;
  Jet& operator*=(const PadicNumber& s);
  Jet& operator/=(long d);

 private:
  std::vector<PadicNumber> c_;
};

// L(chi, n) for n <= 0 via generalized Bernoulli numbers, with the Euler
// factors at the extra primes of chi included.  Trivial chi of modulus 1 at
// n = 0 is refused.
Rational classical_L(const DirichletCharacter& chi, long n, BernoulliCache& cache = BernoulliCache::shared());
PadicNumber classical_L_padic(const DirichletCharacter& chi, long n, long p, long precision,
                              BernoulliCache& cache = BernoulliCache::shared());
// L(chi, n) with the Euler factor at p removed.
Rational lstar(const DirichletCharacter& chi, long n, long p, BernoulliCache& cache = BernoulliCache::shared());
PadicNumber lstar_padic(const DirichletCharacter& chi, long n, long p, long precision,
                        BernoulliCache& cache = BernoulliCache::shared());

// The p-adic L-function L_p(chi omega, s) attached to an odd quadratic chi.
struct LSeriesInstance {
  DirichletCharacter chi;
  long p = 0;
  long precision = 12;

  static LSeriesInstance make(const DirichletCharacter& chi, long p, long precision);

  DirichletCharacter twisted() const { return chi.teichmuller_twist(p, 1); }
  int chi_at_p() const { return chi.value(p); }
  // r = number of primes above p where chi is trivial, i.e. 1 if chi(p) = 1.
  long r() const { return chi_at_p() == 1 ? 1 : 0; }
  bool r_prime_nonempty() const { return chi_at_p() != 1; }
};

// L_p(chi omega, s0 + h) as a jet of the given order, from the Bernoulli
// distribution series.  All coefficients are returned to the instance precision.
Jet kubota_leopoldt_jet(const LSeriesInstance& inst, const PadicNumber& s0, long order,
                        BernoulliCache& cache = BernoulliCache::shared());
PadicNumber kubota_leopoldt(const LSeriesInstance& inst, long s, BernoulliCache& cache = BernoulliCache::shared());
PadicNumber kubota_leopoldt(const LSeriesInstance& inst, const PadicNumber& s,
                            BernoulliCache& cache = BernoulliCache::shared());
// d/ds L_p(chi omega, s) at s = 0, checked against the difference quotient
// (L_p(p^m) - L_p(0)) / p^m.  Throws ConsistencyError if the two disagree
// beyond the O(p^m) bound.
PadicNumber kubota_leopoldt_derivative(const LSeriesInstance& inst, long fd_exponent = 2,
                                       BernoulliCache& cache = BernoulliCache::shared());
// Difference quotient (L_p(p^m) - L_p(0)) / p^m to the instance precision.
PadicNumber kubota_leopoldt_difference_quotient(const LSeriesInstance& inst, long m,
                                                BernoulliCache& cache = BernoulliCache::shared());

struct LpReport {
  long r = 0;
  PadicNumber value_at_0;
  PadicNumber derivative_at_0;
  Rational classical_at_0;  // L(chi, 0)
  PadicNumber analytic_invariant;  // L_an
  bool no_exceptional_zero = false;
};

// L_an = L_p^{(r)}(chi omega, 0) / (r! L(chi, 0) prod_{R'} (1 - chi(p))).
LpReport analytic_invariant(const LSeriesInstance& inst, BernoulliCache& cache = BernoulliCache::shared());

struct OrderProbe {
  // derivatives 0..vanishing-1 vanish to working precision
  long vanishing = 0;
  // first derivative proved nonzero, if any within max_order
  std::optional<long> first_nonzero;
  bool conclusive() const { return first_nonzero.has_value(); }
};

OrderProbe order_probe(const LSeriesInstance& inst, long max_order,
                       BernoulliCache& cache = BernoulliCache::shared());

}  // namespace gstark
