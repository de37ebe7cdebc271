#include "gstark/dirichlet.hpp"

#include <cstdlib>
#include <sstream>

namespace gstark {

namespace {

std::set<long> prime_divisors(long n) {
  std::set<long> out;
  n = std::labs(n);
  for (long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.insert(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.insert(n);
  return out;
}

bool squarefree(long n) {
  n = std::labs(n);
  for (long q = 2; q * q <= n; ++q)
    if (n % (q * q) == 0) return false;
  return true;
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool is_fundamental_discriminant(long d) {
  if (d == 1) return true;
  if (d == 0) return false;
  if (mod_floor(d, 4) == 1) return squarefree(d);
  if (mod_floor(d, 4) != 0) return false;
  long m = d / 4;
  long r = mod_floor(m, 4);
  return (r == 2 || r == 3) && squarefree(m);
}

long fundamental_part(long n) {
  if (n == 0) throw DomainError("fundamental_part(0)");
  long sign = n < 0 ? -1 : 1;
  long a = std::labs(n), core = 1;
  for (long q = 2; q * q <= a; ++q) {
    long e = 0;
    while (a % q == 0) {
      a /= q;
      ++e;
    }
    if (e % 2) core *= q;
  }
  core *= a;
  core *= sign;
  if (core == 1) return 1;
  return mod_floor(core, 4) == 1 ? core : 4 * core;
}

long p_star(long p) { return (p % 4 == 1) ? p : -p; }

int kronecker(long d, const Integer& a) {
  Integer dz = d;
  return mpz_kronecker(dz.get_mpz_t(), a.get_mpz_t());
}

DirichletCharacter DirichletCharacter::kronecker(long disc) {
  if (!is_fundamental_discriminant(disc))
    throw DomainError(std::to_string(disc) + " is not a fundamental discriminant");
  DirichletCharacter c;
  c.disc_ = disc;
  return c;
}

DirichletCharacter DirichletCharacter::teichmuller_power(long p, long j) {
  if (p < 3 || !is_prime(p)) throw DomainError("teichmuller character needs an odd prime");
  DirichletCharacter c;
  c.p_ = p;
  c.j_ = j;
  c.extra_.insert(p);
  c.canonicalize();
  return c;
}

void DirichletCharacter::canonicalize() {
  if (p_ != 0) {
    long half = (p_ - 1) / 2;
    j_ = mod_floor(j_, p_ - 1);
    if (disc_ % p_ == 0) {
      disc_ /= p_star(p_);
      j_ = mod_floor(j_ + half, p_ - 1);
    }
    if (j_ == half && half != 0) {
      disc_ = fundamental_part(disc_ * p_star(p_));
      j_ = 0;
    }
  } else {
    j_ = 0;
  }
  long f = conductor();
  for (auto it = extra_.begin(); it != extra_.end();)
    it = (f % *it == 0) ? extra_.erase(it) : std::next(it);
}

long DirichletCharacter::conductor() const {
  long f = std::labs(disc_);
  if (j_ != 0) f *= p_;
  return f;
}

long DirichletCharacter::modulus() const {
  long m = conductor();
  for (long q : extra_) m *= q;
  return m;
}

int DirichletCharacter::parity() const {
  int s = disc_ < 0 ? -1 : 1;
  if (j_ % 2) s = -s;
  return s;
}

DirichletCharacter DirichletCharacter::raise_modulus(const std::set<long>& primes) const {
  DirichletCharacter c = *this;
  for (long q : primes) {
    if (!is_prime(q)) throw DomainError("raise_modulus: " + std::to_string(q) + " is not prime");
    c.extra_.insert(q);
  }
  c.canonicalize();
  return c;
}

DirichletCharacter DirichletCharacter::primitive() const {
  DirichletCharacter c = *this;
  c.extra_.clear();
  return c;
}

DirichletCharacter DirichletCharacter::inverse() const {
  DirichletCharacter c = *this;
  c.j_ = -c.j_;
  c.canonicalize();
  return c;
}

DirichletCharacter DirichletCharacter::teichmuller_twist(long p, long j) const {
  return *this * teichmuller_power(p, j);
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
  if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
    throw DomainError("product of characters with Teichmuller parts at different primes");
  DirichletCharacter c;
  long prod = disc_ * o.disc_;
  c.disc_ = fundamental_part(prod);
  c.p_ = p_ != 0 ? p_ : o.p_;
  c.j_ = j_ + o.j_;
  c.canonicalize();
  std::set<long> primes = prime_divisors(modulus());
  for (long q : prime_divisors(o.modulus())) primes.insert(q);
  for (long q : primes)
    if (c.conductor() % q != 0) c.extra_.insert(q);
  return c;
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
  if (disc_ != o.disc_ || j_ != o.j_ || extra_ != o.extra_) return false;
  return j_ == 0 || p_ == o.p_;
}

bool DirichletCharacter::killed_by_extra(const Integer& a) const {
  for (long q : extra_)
    if (a % q == 0) return true;
  return false;
}

int DirichletCharacter::value(const Integer& a) const {
  if (!is_quadratic()) throw UnsupportedError("value(): character " + to_string() + " is not quadratic");
  if (killed_by_extra(a)) return 0;
  return gstark::kronecker(disc_, a);
}

PadicNumber DirichletCharacter::value_padic(const Integer& a, long p, long n) const {
  if (j_ != 0 && p != p_)
    throw DomainError("character " + to_string() + " evaluated at the wrong prime");
  if (killed_by_extra(a)) return PadicNumber::exact_zero(p);
  int k = gstark::kronecker(disc_, a);
  if (k == 0) return PadicNumber::exact_zero(p);
  if (j_ == 0) return PadicNumber::from_integer(p, k, n);
  if (a % p == 0) return PadicNumber::exact_zero(p);
  PadicNumber w = teichmuller(a, p, n).pow(j_);
  return k == 1 ? w : -w;
}

std::string DirichletCharacter::to_string() const {
  std::ostringstream os;
  bool any = false;
  if (disc_ != 1) {
    os << "chi_" << disc_;
    any = true;
  }
  if (j_ != 0) {
    if (any) os << "*";
    os << "omega_" << p_ << "^" << j_;
    any = true;
  }
  if (!any) os << "1";
  os << " mod " << modulus();
  return os.str();
}

}  // namespace gstark
