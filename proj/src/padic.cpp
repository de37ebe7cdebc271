#include "gstark/padic.hpp"

#include <algorithm>
#include <sstream>

namespace gstark {

Integer ipow(long base, long exp) {
  if (exp < 0) throw DomainError("ipow: negative exponent");
  Integer r;
  if (base >= 0) {
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  } else {
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(-base), static_cast<unsigned long>(exp));
    if (exp % 2) r = -r;
  }
  return r;
}

long valuation(const Integer& a, long p) {
  if (a == 0) throw DomainError("valuation of zero");
  Integer t = a, pp = p;
  return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t()));
}

long valuation(const Rational& q, long p) {
  if (q == 0) throw DomainError("valuation of zero");
  return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

bool is_prime(long n) {
  if (n < 2) return false;
  Integer z = n;
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

long floor_log(long n, long p) {
  long e = 0;
  long q = p;
  while (q <= n) {
    ++e;
    if (q > n / p) break;
    q *= p;
  }
  return e;
}

long factorial_valuation(long n, long p) {
  long s = 0;
  for (long q = p; q <= n; q *= p) {
    s += n / q;
    if (q > n / p) break;
  }
  return s;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    Rational r;
    if (slash == std::string::npos) {
      r = Rational(Integer(s), 1);
    } else {
      Integer den(s.substr(slash + 1));
      if (den == 0) throw DomainError("zero denominator in '" + s + "'");
      r = Rational(Integer(s.substr(0, slash)), den);
    }
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational: '" + s + "'");
  }
}

// ---------------------------------------------------------------------------

PadicNumber PadicNumber::exact_zero(long p) {
  PadicNumber r;
  r.p_ = p;
  return r;
}

PadicNumber PadicNumber::zero(long p, long abs_precision) {
  PadicNumber r;
  r.p_ = p;
  r.exact_zero_ = false;
  r.v_ = abs_precision;
  r.n_ = abs_precision;
  r.unit_ = 0;
  return r;
}

PadicNumber PadicNumber::normalized(long p, long v, Integer value, long n) {
  if (v >= n) return zero(p, n);
  Integer mod = ipow(p, n - v);
  mpz_mod(value.get_mpz_t(), value.get_mpz_t(), mod.get_mpz_t());
  if (value == 0) return zero(p, n);
  Integer pp = p;
  long k = static_cast<long>(mpz_remove(value.get_mpz_t(), value.get_mpz_t(), pp.get_mpz_t()));
  PadicNumber r;
  r.p_ = p;
  r.exact_zero_ = false;
  r.v_ = v + k;
  r.n_ = n;
  r.unit_ = std::move(value);
  return r;
}

PadicNumber PadicNumber::from_integer(long p, const Integer& a, long abs_precision) {
  if (p < 2) throw DomainError("p-adic number needs a prime");
  if (abs_precision >= kExact) throw DomainError("finite precision required");
  return normalized(p, 0, a, abs_precision);
}

PadicNumber PadicNumber::from_rational(long p, const Rational& q, long abs_precision) {
  if (q == 0) return zero(p, abs_precision);
  Integer num = q.get_num(), den = q.get_den(), pp = p;
  long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()));
  long v = -vd;
  if (v >= abs_precision) return zero(p, abs_precision);
  Integer mod = ipow(p, abs_precision - v);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  return normalized(p, v, num * inv, abs_precision);
}

long PadicNumber::relative_precision() const {
  if (exact_zero_) return kExact;
  return n_ - v_;
}

long PadicNumber::common_prime(const PadicNumber& o) const {
  if (p_ == 0) return o.p_;
  if (o.p_ != 0 && o.p_ != p_) throw DomainError("p-adic numbers over different primes");
  return p_;
}

PadicNumber PadicNumber::with_precision(long n) const {
  if (n >= n_) return *this;
  if (exact_zero_) return zero(p_, n);
  return normalized(p_, v_, unit_, n);
}

Integer PadicNumber::residue() const {
  if (exact_zero_ || unit_ == 0) return 0;
  if (v_ < 0) throw DomainError("residue of a non-integral p-adic number");
  return unit_ * ipow(p_, v_);
}

std::string PadicNumber::to_string() const {
  if (exact_zero_) return "0";
  std::ostringstream os;
  if (unit_ == 0) {
    os << "O(" << p_ << "^" << n_ << ")";
    return os.str();
  }
  if (v_ >= 0)
    os << residue().get_str();
  else
    os << unit_.get_str() << "*" << p_ << "^(" << v_ << ")";
  os << " + O(" << p_ << "^" << n_ << ")";
  return os.str();
}

PadicNumber PadicNumber::operator-() const {
  if (exact_zero_ || unit_ == 0) return *this;
  return normalized(p_, v_, -unit_, n_);
}

PadicNumber& PadicNumber::operator+=(const PadicNumber& o) {
  long p = common_prime(o);
  if (o.exact_zero_) return *this;
  if (exact_zero_) return *this = o;
  long n = std::min(n_, o.n_);
  long vmin = std::min(v_, o.v_);
  if (vmin >= n) return *this = zero(p, n);
  Integer value = unit_ * ipow(p, v_ - vmin) + o.unit_ * ipow(p, o.v_ - vmin);
  return *this = normalized(p, vmin, std::move(value), n);
}

PadicNumber& PadicNumber::operator-=(const PadicNumber& o) { return *this += -o; }

PadicNumber& PadicNumber::operator*=(const PadicNumber& o) {
  long p = common_prime(o);
  if (exact_zero_ || o.exact_zero_) return *this = exact_zero(p);
  long v = v_ + o.v_;
  long n = std::min(v_ + o.n_, o.v_ + n_);
  if (unit_ == 0 || o.unit_ == 0 || v >= n) return *this = zero(p, n);
  return *this = normalized(p, v, unit_ * o.unit_, n);
}

PadicNumber PadicNumber::inverse() const {
  if (exact_zero_) throw DomainError("division by exact zero");
  if (unit_ == 0) throw PrecisionError("division by a value that is zero to precision " + std::to_string(n_));
  long rel = n_ - v_;
  Integer mod = ipow(p_, rel), inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  return normalized(p_, -v_, inv, -v_ + rel);
}

PadicNumber& PadicNumber::operator/=(const PadicNumber& o) {
  long p = common_prime(o);
  if (o.exact_zero_) throw DomainError("division by exact zero");
  if (o.unit_ == 0)
    throw PrecisionError("division by a value that is zero to precision " + std::to_string(o.n_));
  if (exact_zero_) return *this = exact_zero(p);
  if (unit_ == 0) return *this = zero(p, n_ - o.v_);
  return *this *= o.inverse();
}

PadicNumber& PadicNumber::operator*=(const Integer& c) {
  if (exact_zero_) return *this;
  if (c == 0) return *this = exact_zero(p_);
  Integer cu = c, pp = p_;
  long k = static_cast<long>(mpz_remove(cu.get_mpz_t(), cu.get_mpz_t(), pp.get_mpz_t()));
  if (unit_ == 0) return *this = zero(p_, n_ + k);
  return *this = normalized(p_, v_ + k, unit_ * cu, n_ + k);
}

PadicNumber& PadicNumber::operator/=(const Integer& c) {
  if (c == 0) throw DomainError("division by exact zero");
  if (exact_zero_) return *this;
  Integer cu = c, pp = p_;
  long k = static_cast<long>(mpz_remove(cu.get_mpz_t(), cu.get_mpz_t(), pp.get_mpz_t()));
  if (unit_ == 0) return *this = zero(p_, n_ - k);
  long rel = n_ - v_;
  Integer mod = ipow(p_, rel), inv;
  mpz_invert(inv.get_mpz_t(), cu.get_mpz_t(), mod.get_mpz_t());
  return *this = normalized(p_, v_ - k, unit_ * inv, n_ - k);
}

PadicNumber PadicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) {
    if (exact_zero_) throw DomainError("0^0");
    return from_integer(p_, 1, relative_precision());
  }
  PadicNumber base = *this, acc;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      acc = have ? acc * base : base;
      have = true;
    }
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

long discrepancy_valuation(const PadicNumber& a, const PadicNumber& b) {
  return (a - b).valuation();
}

bool equal_to_precision(const PadicNumber& a, const PadicNumber& b, long m) {
  if (a.precision() < m || b.precision() < m) return false;
  return discrepancy_valuation(a, b) >= m;
}

// ---------------------------------------------------------------------------

namespace {

// log(1 + t) for v(t) >= 1, summed until the tail is below p^target.
PadicNumber log1p_series(const PadicNumber& t, long target) {
  long p = t.prime();
  if (t.is_zero()) return PadicNumber::zero(p, target);
  long vt = t.valuation();
  PadicNumber sum = PadicNumber::exact_zero(p);
  PadicNumber tn = t;
  for (long n = 1;; ++n) {
    if (n > 1 && n * vt - floor_log(n, p) >= target) break;
    PadicNumber term = tn / n;
    if (n % 2 == 0) term = -term;
    sum += term;
    tn *= t;
  }
  return sum;
}

}  // namespace

PadicNumber plog(const PadicNumber& x) {
  if (x.is_exact_zero()) throw DomainError("plog(0)");
  if (x.is_zero()) throw PrecisionError("plog of a value that is zero to precision");
  long p = x.prime();
  long rel = x.relative_precision();
  if (rel < 2) throw PrecisionError("plog needs at least 2 digits of relative precision");
  PadicNumber u = PadicNumber::from_integer(p, x.unit(), rel);
  PadicNumber w = u.pow(p - 1);
  PadicNumber t = w - PadicNumber::one(p, rel);
  PadicNumber lg = log1p_series(t, rel) / (p - 1);
  return lg.with_precision(rel);
}

PadicNumber pexp(const PadicNumber& x) {
  long p = x.prime();
  if (p == 2) throw UnsupportedError("pexp for p = 2");
  if (x.is_exact_zero()) throw DomainError("pexp of exact zero needs a precision");
  long n = x.precision();
  if (!x.is_zero() && x.valuation() < 1) throw DomainError("pexp outside p Z_p");
  if (x.is_zero()) return PadicNumber::one(p, n);
  long vx = x.valuation();
  PadicNumber sum = PadicNumber::one(p, n);
  PadicNumber term = PadicNumber::one(p, n);
  for (long k = 1;; ++k) {
    // v(x^k / k!) >= k vx - (k - 1) / (p - 1), increasing in k
    if (k * vx - (k - 1) / (p - 1) >= n + 1) break;
    term = term * x / k;
    sum += term;
  }
  return sum.with_precision(n);
}

PadicNumber teichmuller(const Integer& a, long p, long n) {
  if (n < 1) throw PrecisionError("teichmuller needs precision >= 1");
  Integer r = a % p;
  if (r < 0) r += p;
  if (r == 0) throw DomainError("teichmuller of a multiple of p");
  Integer mod = ipow(p, n), e = ipow(p, n - 1), out;
  Integer am = a % mod;
  if (am < 0) am += mod;
  mpz_powm(out.get_mpz_t(), am.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return PadicNumber::from_integer(p, out, n);
}

PadicNumber angle_bracket(const Integer& a, long p, long n) {
  return PadicNumber::from_integer(p, a, n) / teichmuller(a, p, n);
}

namespace {

Integer sqrt_mod_prime(const Integer& a, long p) {
  Integer am = a % p;
  if (am < 0) am += p;
  Integer pp = p;
  if (p < (1L << 16)) {
    long av = am.get_si();
    for (long r = 1; r < p; ++r)
      if ((r * r) % p == av) return r;
    throw NoRootError("no square root mod p");
  }
  if (mpz_legendre(am.get_mpz_t(), pp.get_mpz_t()) != 1) throw NoRootError("no square root mod p");
  // Tonelli-Shanks
  long s = 0;
  Integer q = pp - 1;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), pp.get_mpz_t()) != -1) ++z;
  Integer c, r, t, b, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), am.get_mpz_t(), e.get_mpz_t(), pp.get_mpz_t());
  mpz_powm(t.get_mpz_t(), am.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t());
  long m = s;
  while (t != 1) {
    long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % pp;
      ++i;
    }
    b = c;
    for (long j = 0; j < m - i - 1; ++j) b = b * b % pp;
    r = r * b % pp;
    c = b * b % pp;
    t = t * c % pp;
    m = i;
  }
  return r;
}

}  // namespace

PadicNumber hensel_sqrt(const Integer& a, long p, long n) {
  if (p == 2) throw UnsupportedError("hensel_sqrt for p = 2");
  if (n < 1) throw PrecisionError("hensel_sqrt needs precision >= 1");
  if (a % p == 0) throw UnsupportedError("hensel_sqrt: p divides the radicand");
  Integer pp = p, am = a % pp;
  if (am < 0) am += pp;
  if (mpz_legendre(am.get_mpz_t(), pp.get_mpz_t()) != 1)
    throw NoRootError("no square root of " + a.get_str() + " in Z_" + std::to_string(p));
  Integer r = sqrt_mod_prime(a, p);
  if (r > pp - r) r = pp - r;
  long k = 1;
  while (k < n) {
    k = std::min(2 * k, n);
    Integer mod = ipow(p, k), inv, twor = 2 * r;
    mpz_invert(inv.get_mpz_t(), twor.get_mpz_t(), mod.get_mpz_t());
    Integer f = r * r - a;
    r = (r - f * inv) % mod;
    if (r < 0) r += mod;
  }
  return PadicNumber::from_integer(p, r, n);
}

PadicNumber binomial(const PadicNumber& x, long k) {
  if (k < 0) throw DomainError("binomial with negative k");
  long p = x.prime();
  PadicNumber acc = PadicNumber::one(p, x.precision());
  for (long j = 0; j < k; ++j) {
    acc *= x - PadicNumber::from_integer(p, j, x.precision());
    acc /= (j + 1);
  }
  return acc;
}

}  // namespace gstark
