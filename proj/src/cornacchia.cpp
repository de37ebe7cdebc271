#include "gstark/cornacchia.hpp"

#include <algorithm>
#include <set>

namespace gstark {

namespace {

constexpr long kBruteForceLimit = 1L << 20;

std::vector<std::pair<Integer, long>> factor(Integer m) {
  std::vector<std::pair<Integer, long>> out;
  for (long q = 2; m > 1 && Integer(q) * q <= m; ++q) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) break;
    if (q > kBruteForceLimit) throw UnsupportedError("factor: no small factor found");
    if (m % q != 0) continue;
    long e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    out.emplace_back(Integer(q), e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<Integer> roots_prime_power(const Integer& a, const Integer& q, long e) {
  Integer qe;
  mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
  Integer am = a % qe;
  if (am < 0) am += qe;
  std::vector<Integer> out;
  if (q != 2 && am % q != 0) {
    if (mpz_legendre(am.get_mpz_t(), q.get_mpz_t()) != 1) return out;
    if (!q.fits_slong_p()) throw UnsupportedError("sqrt_mod: prime factor too large");
    Integer r = hensel_sqrt(am, q.get_si(), e).residue();
    out.push_back(r);
    Integer s = (qe - r) % qe;
    if (s != r) out.push_back(s);
  } else {
    if (qe > kBruteForceLimit) throw UnsupportedError("sqrt_mod: ramified prime power too large");
    for (Integer x = 0; x < qe; ++x)
      if ((x * x - am) % qe == 0) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Integer> sqrt_mod(const Integer& a, const Integer& m) {
  if (m <= 0) throw DomainError("sqrt_mod: modulus must be positive");
  std::vector<Integer> roots{Integer(0)};
  Integer modulus = 1;
  for (const auto& [q, e] : factor(m)) {
    auto local = roots_prime_power(a, q, e);
    if (local.empty()) return {};
    Integer qe;
    mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
    std::vector<Integer> next;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), qe.get_mpz_t());
    for (const auto& r0 : roots)
      for (const auto& r1 : local) {
        // x == r0 mod modulus, x == r1 mod qe
        Integer t = ((r1 - r0) * inv) % qe;
        if (t < 0) t += qe;
        next.push_back(r0 + modulus * t);
      }
    roots = std::move(next);
    modulus *= qe;
  }
  for (auto& r : roots) {
    r %= m;
    if (r < 0) r += m;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<std::pair<Integer, Integer>> cornacchia(const Integer& D, const Integer& m) {
  if (D <= 0 || m <= 0) throw DomainError("cornacchia: D and m must be positive");
  Integer dm4 = D % 4;
  if (dm4 != 0 && dm4 != 3) throw DomainError("cornacchia: D must be 0 or 3 mod 4");
  Integer four_m = 4 * m, two_m = 2 * m;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), four_m.get_mpz_t());
  for (const Integer& x0 : sqrt_mod(-D, four_m)) {
    if (x0 > two_m) continue;
    Integer a = two_m, b = x0;
    while (b > bound) {
      Integer r = a % b;
      a = b;
      b = r;
    }
    Integer c = four_m - b * b;
    if (c <= 0 || c % D != 0) continue;
    c /= D;
    if (mpz_perfect_square_p(c.get_mpz_t()) == 0) continue;
    Integer y;
    mpz_sqrt(y.get_mpz_t(), c.get_mpz_t());
    if (b == 0) continue;
    return std::make_pair(b, y);
  }
  return std::nullopt;
}

}  // namespace gstark
