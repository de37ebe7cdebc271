#include "gstark/lambda_ring.hpp"

#include <algorithm>

namespace gstark {

LambdaElement::LambdaElement(long p, long truncation)
    : p_(p), c_(std::max(truncation, 0L) + 1, PadicNumber::exact_zero(p)) {
  if (truncation < 0) throw DomainError("truncation must be >= 0");
}

LambdaElement LambdaElement::constant(const PadicNumber& c, long truncation) {
  LambdaElement e(c.prime(), truncation);
  e.c_[0] = c;
  return e;
}

LambdaElement LambdaElement::variable(long p, long truncation, long precision) {
  LambdaElement e(p, truncation);
  if (truncation >= 1) e.c_[1] = PadicNumber::one(p, precision);
  return e;
}

LambdaElement LambdaElement::from_coefficients(std::vector<PadicNumber> coeffs) {
  if (coeffs.empty()) throw DomainError("empty coefficient list");
  LambdaElement e(coeffs[0].prime(), static_cast<long>(coeffs.size()) - 1);
  e.c_ = std::move(coeffs);
  return e;
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& o) {
  if (o.truncation() != truncation()) throw DomainError("truncation mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

LambdaElement& LambdaElement::operator-=(const LambdaElement& o) {
  if (o.truncation() != truncation()) throw DomainError("truncation mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

LambdaElement LambdaElement::operator*(const LambdaElement& o) const {
  if (o.truncation() != truncation()) throw DomainError("truncation mismatch");
  LambdaElement r(p_, truncation());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

LambdaElement& LambdaElement::operator*=(const PadicNumber& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

PadicNumber log_u(long p, long precision) {
  return plog(PadicNumber::from_integer(p, generator_u(p), precision + 1)).with_precision(precision + 1);
}

namespace {

long max_precision(const LambdaElement& h) {
  long n = 0;
  for (const auto& c : h.coefficients())
    if (!c.is_exact_zero()) n = std::max(n, c.precision());
  return std::max(n, 1L);
}

PadicNumber evaluate(const LambdaElement& h, const PadicNumber& t0) {
  const long p = h.prime();
  const long M = h.truncation();
  PadicNumber acc = PadicNumber::exact_zero(p);
  for (long i = M; i >= 0; --i) acc = acc * t0 + h.coeff(i);
  if (t0.is_exact_zero()) return acc;
  long min_v = 0;
  for (const auto& c : h.coefficients())
    if (!c.is_zero()) min_v = std::min(min_v, c.valuation());
  long cap = (M + 1) * t0.valuation() + min_v;
  if (cap < 1) throw PrecisionError("truncation too short to evaluate nu_k");
  return acc.with_precision(cap);
}

}  // namespace

PadicNumber nu_k(const LambdaElement& h, long k) {
  const long p = h.prime();
  if (k == 1) return evaluate(h, PadicNumber::exact_zero(p));
  long work = max_precision(h) + 2;
  PadicNumber u = PadicNumber::from_integer(p, generator_u(p), work);
  PadicNumber t0 = u.pow(k - 1) - PadicNumber::one(p, work);
  return evaluate(h, t0);
}

PadicNumber nu_k(const LambdaElement& h, const PadicNumber& k) {
  const long p = h.prime();
  long work = max_precision(h) + 2;
  PadicNumber km1 = k.with_precision(work) - PadicNumber::one(p, work);
  if (km1.is_exact_zero()) return evaluate(h, km1);
  PadicNumber t0 = pexp(km1 * log_u(p, work)) - PadicNumber::one(p, work);
  return evaluate(h, t0);
}

LambdaElement epsilon_char(const Integer& x, long p, long truncation, long precision) {
  if (x % p == 0) throw DomainError("epsilon_char needs x prime to p");
  const long K = precision + 3 + factorial_valuation(truncation, p);
  PadicNumber alpha = plog(angle_bracket(x, p, K)) / log_u(p, K);
  std::vector<PadicNumber> c;
  c.reserve(truncation + 1);
  PadicNumber b = PadicNumber::one(p, K);
  for (long i = 0; i <= truncation; ++i) {
    if (b.precision() < precision) throw PrecisionError("epsilon_char lost digits");
    c.push_back(b.with_precision(precision));
    b = b * (alpha - PadicNumber::from_integer(p, i, K)) / (i + 1);
  }
  return LambdaElement::from_coefficients(std::move(c));
}

PadicNumber PiNormalized::leading_value() const { return unit_part.coeff(0); }

PiNormalized pi_normalize(const LambdaElement& h) {
  const long M = h.truncation();
  long n = 0;
  while (n <= M && h.coeff(n).is_zero()) ++n;
  if (n > M) throw PrecisionError("pi-order is indeterminate: all coefficients vanish to precision");
  PadicNumber lu = log_u(h.prime(), max_precision(h) + n);
  PadicNumber scale = lu.pow(n);
  std::vector<PadicNumber> c;
  for (long i = n; i <= M; ++i) c.push_back(h.coeff(i) * scale);
  return PiNormalized{n, LambdaElement::from_coefficients(std::move(c))};
}

PadicNumber leading_term_difference(const LambdaElement& h, long n, long m) {
  if (n < 0 || m < 1) throw DomainError("leading_term_difference needs n >= 0, m >= 1");
  const long p = h.prime();
  long delta = ipow(p, m).get_si();
  PadicNumber sum = PadicNumber::exact_zero(p);
  for (long i = 0; i <= n; ++i) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    if ((n - i) % 2) c = -c;
    sum += nu_k(h, 1 + i * delta) * c;
  }
  Integer denom = ipow(p, m * n);
  for (long i = 2; i <= n; ++i) denom *= i;
  return sum / denom;
}

}  // namespace gstark
