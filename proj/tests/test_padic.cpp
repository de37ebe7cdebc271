#include <cmath>
#include <random>

#include "doctest.h"
#include "gstark/cornacchia.hpp"
#include "gstark/padic.hpp"

using namespace gstark;

namespace {

// log(1 + t) summed with exact rationals, reduced mod p^n.
Integer oracle_log1p(const Integer& t, long p, long n, long terms) {
  Rational s = 0;
  Integer tn = t;
  for (long k = 1; k <= terms; ++k) {
    Rational term(tn, k);
    s += (k % 2) ? term : Rational(-term);
    tn *= t;
  }
  s.canonicalize();
  Integer mod = ipow(p, n), inv, den = s.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  Integer r = (Integer(s.get_num()) * inv) % mod;
  if (r < 0) r += mod;
  return r;
}

// Teichmuller lift by iterating z -> z^p until it stops moving.
Integer oracle_teich(long a, long p, long n) {
  Integer mod = ipow(p, n), z = a % p, prev = -1;
  while (z != prev) {
    prev = z;
    Integer pp = p;
    mpz_powm(z.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t(), mod.get_mpz_t());
  }
  return z;
}

}  // namespace

TEST_CASE("precision rules for sums and products") {
  auto a = PadicNumber::from_integer(5, 3 * 25, 7);  // v = 2, N = 7
  auto b = PadicNumber::from_integer(5, 4, 4);       // v = 0, N = 4
  CHECK((a + b).precision() == 4);
  CHECK((a * b).precision() == std::min(2 + 4, 0 + 7));
  CHECK((a * b).valuation() == 2);
  auto z = PadicNumber::zero(5, 3);
  CHECK(z.is_zero());
  CHECK(z.valuation() == 3);
  CHECK((z * a).precision() == 5);
  CHECK((a / b).valuation() == 2);
  CHECK((a / b).relative_precision() == 4);
  CHECK((PadicNumber::exact_zero(5) + a).residue() == 75);
}

TEST_CASE("rational conversion and residue") {
  auto x = PadicNumber::from_rational(7, Rational(1, 3), 5);
  CHECK((x * 3).residue() == 1);
  auto y = PadicNumber::from_rational(7, Rational(2, 49), 3);
  CHECK(y.valuation() == -2);
  CHECK(y.precision() == 3);
  CHECK_THROWS_AS(y.residue(), DomainError);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}

TEST_CASE("teichmuller and angle bracket") {
  CHECK(teichmuller(2, 5, 2).residue() == 7);
  for (long p : {3L, 5L, 7L, 11L, 13L})
    for (long a = 1; a < 3 * p; ++a) {
      if (a % p == 0) continue;
      auto w = teichmuller(a, p, 10);
      CHECK(w.residue() == oracle_teich(a, p, 10));
      CHECK(w.pow(p - 1).residue() == 1);
      CHECK((w.residue() - a) % p == 0);
      auto br = angle_bracket(a, p, 10);
      CHECK((br.residue() - 1) % p == 0);
    }
  CHECK_THROWS_AS(teichmuller(10, 5, 4), DomainError);
}

TEST_CASE("plog against the rational series") {
  // log(6) = log(1 + 5) in Z_5
  auto l = plog(PadicNumber::from_integer(5, 6, 12));
  CHECK(l.precision() == 12);
  CHECK(l.residue() == oracle_log1p(5, 5, 12, 40));
  // general units through <a>
  for (long p : {3L, 5L, 7L})
    for (long a = 2; a < 40; ++a) {
      if (a % p == 0) continue;
      auto br = angle_bracket(a, p, 14);
      Integer t = br.residue() - 1;
      CHECK(plog(PadicNumber::from_integer(p, a, 10)).residue() == oracle_log1p(t, p, 10, 80));
    }
  CHECK(plog(PadicNumber::from_integer(7, 7, 10)).is_zero());
  CHECK_THROWS_AS(plog(PadicNumber::exact_zero(5)), DomainError);
  CHECK_THROWS_AS(plog(PadicNumber::zero(5, 6)), PrecisionError);
  CHECK_THROWS_AS(plog(PadicNumber::from_integer(5, 2, 1)), PrecisionError);
}

TEST_CASE("plog is a homomorphism and inverts pexp") {
  std::mt19937_64 rng(11);
  for (long p : {3L, 5L, 7L, 13L}) {
    std::uniform_int_distribution<long> dist(1, 100000);
    for (int trial = 0; trial < 40; ++trial) {
      long a = dist(rng), b = dist(rng);
      auto x = PadicNumber::from_integer(p, a, 12);
      auto y = PadicNumber::from_integer(p, b, 12);
      if (x.is_zero() || y.is_zero()) continue;
      auto lhs = plog(x * y);
      auto rhs = plog(x) + plog(y);
      CHECK(discrepancy_valuation(lhs, rhs) >= std::min(lhs.precision(), rhs.precision()));
      auto e = PadicNumber::from_integer(p, p * (a % 1000), 12);
      auto back = plog(pexp(e));
      CHECK(discrepancy_valuation(back, e) >= 12);
    }
  }
}

TEST_CASE("precision soundness: extra digits then truncation changes nothing") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(1, 1000000);
  for (long p : {3L, 5L, 7L}) {
    for (int trial = 0; trial < 30; ++trial) {
      long a = dist(rng), b = dist(rng);
      const long N = 9;
      auto lo_a = PadicNumber::from_integer(p, a, N), lo_b = PadicNumber::from_integer(p, b, N);
      auto hi_a = PadicNumber::from_integer(p, a, N + 5), hi_b = PadicNumber::from_integer(p, b, N + 5);
      auto same = [&](const PadicNumber& lo, const PadicNumber& hi) {
        auto t = hi.with_precision(lo.precision());
        CHECK(t.valuation() == lo.valuation());
        CHECK(t.unit() == lo.unit());
      };
      same(lo_a * lo_b, hi_a * hi_b);
      same(lo_a + lo_b, hi_a + hi_b);
      if (!lo_b.is_zero() && lo_b.valuation() == 0) same(lo_a / lo_b, hi_a / hi_b);
      if (!lo_a.is_zero() && lo_a.relative_precision() >= 2) same(plog(lo_a), plog(hi_a));
    }
  }
}

TEST_CASE("hensel_sqrt") {
  CHECK(hensel_sqrt(-1, 5, 2).residue() == 7);
  // the smaller-residue rule gives 11 for -4; 14 is the other root
  auto r = hensel_sqrt(-4, 5, 2);
  CHECK(r.residue() == 11);
  CHECK((-r).residue() == 14);
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L})
    for (long a = -30; a <= 30; ++a) {
      if (a % p == 0) continue;
      Integer am = ((a % p) + p) % p, pp = p;
      if (mpz_legendre(am.get_mpz_t(), pp.get_mpz_t()) != 1) {
        CHECK_THROWS_AS(hensel_sqrt(a, p, 3), NoRootError);
        continue;
      }
      auto s = hensel_sqrt(a, p, 3);
      Integer mod = ipow(p, 3), x = s.residue();
      CHECK((x * x - a) % mod == 0);
      // brute force: every root mod p^3 has residue mod p at least ours
      for (Integer y = 0; y < mod; ++y)
        if ((y * y - a) % mod == 0) CHECK(y % p >= x % p);
    }
  CHECK_THROWS_AS(hensel_sqrt(10, 5, 3), UnsupportedError);
  CHECK_THROWS_AS(hensel_sqrt(2, 5, 3), NoRootError);
}

TEST_CASE("cornacchia") {
  auto a = cornacchia(3, 7);
  REQUIRE(a);
  CHECK(a->first == 5);
  CHECK(a->second == 1);
  auto b = cornacchia(4, 5);
  REQUIRE(b);
  CHECK(b->first == 4);
  CHECK(b->second == 1);
  CHECK_FALSE(cornacchia(3, 5));
  CHECK_THROWS_AS(cornacchia(5, 7), DomainError);
  // brute force over small prime moduli
  for (long D : {3L, 4L, 7L, 8L, 11L, 15L, 20L, 23L})
    for (long m = 2; m < 200; ++m) {
      if (!is_prime(m) || (2 * D) % m == 0) continue;
      bool exists = false;
      for (long y = 1; D * y * y < 4 * m; ++y) {
        long c = 4 * m - D * y * y;
        long x = static_cast<long>(std::llround(std::sqrt(static_cast<double>(c))));
        if (x > 0 && x * x == c) exists = true;
      }
      auto s = cornacchia(D, m);
      CHECK(exists == s.has_value());
      if (s) CHECK(s->first * s->first + D * s->second * s->second == 4 * m);
    }
}

TEST_CASE("sqrt_mod against brute force") {
  for (long m : {8L, 20L, 28L, 36L, 45L, 100L, 121L, 500L})
    for (long a = -12; a <= 12; ++a) {
      std::vector<Integer> brute;
      for (long x = 0; x < m; ++x)
        if (((x * x - a) % m + m) % m == 0) brute.push_back(x);
      CHECK(sqrt_mod(a, m) == brute);
    }
}
