#pragma once

#include <set>
#include <string>

#include "gstark/padic.hpp"

namespace gstark {

bool is_fundamental_discriminant(long d);
// Fundamental discriminant of Q(sqrt(n)), n not a square.  Returns 1 for squares.
long fundamental_part(long n);
// (-1)^((p-1)/2) p
long p_star(long p);
// Kronecker symbol (d | a)
int kronecker(long d, const Integer& a);

// A Dirichlet character over Q of the shape chi_D * omega^j, optionally
// imprimitive at a set of extra primes.
//
// The canonical form folds the p-part of D into the Teichmuller exponent:
// chi_{p*} = omega^((p-1)/2).  A character is quadratic exactly when the
// folded exponent is 0, in which case it is stored as a Kronecker character.
class DirichletCharacter {
 public:
  DirichletCharacter() = default;  // trivial character mod 1

  static DirichletCharacter kronecker(long disc);
  // omega^j viewed with modulus p, also for j == 0 mod p-1.
  static DirichletCharacter teichmuller_power(long p, long j);

  DirichletCharacter raise_modulus(const std::set<long>& primes) const;
  DirichletCharacter primitive() const;
  DirichletCharacter inverse() const;
  DirichletCharacter teichmuller_twist(long p, long j) const;
  DirichletCharacter operator*(const DirichletCharacter& o) const;
  bool operator==(const DirichletCharacter& o) const;

  long discriminant() const { return disc_; }
  long prime() const { return p_; }
  long teichmuller_exponent() const { return j_; }
  const std::set<long>& extra_primes() const { return extra_; }

  long conductor() const;
  // conductor times the extra primes, so moduli track prime support only:
  // chi_-4 squared has modulus 2
  long modulus() const;
  bool is_quadratic() const { return j_ == 0; }
  bool is_trivial() const { return j_ == 0 && disc_ == 1; }
  int parity() const;
  bool is_odd() const { return parity() == -1; }

  // Value in {-1, 0, 1}; quadratic characters only.
  int value(const Integer& a) const;
  // Value in Z_p to precision n.  For characters without a Teichmuller part
  // any odd prime may be given; otherwise p must match.
  PadicNumber value_padic(const Integer& a, long p, long n) const;

  std::string to_string() const;

 private:
  void canonicalize();
  bool killed_by_extra(const Integer& a) const;

  long disc_ = 1;
  long p_ = 0;
  long j_ = 0;
  std::set<long> extra_;
};

}  // namespace gstark
