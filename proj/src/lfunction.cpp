#include "gstark/lfunction.hpp"

#include <numeric>

namespace gstark {

Jet::Jet(long order, const PadicNumber& constant) : c_(order + 1, PadicNumber::exact_zero(constant.prime())) {
  c_[0] = constant;
}

Jet Jet::variable(long order, const PadicNumber& value, long p, long precision) {
  Jet j(order, value);
  if (order >= 1) j.c_[1] = PadicNumber::one(p, precision);
  return j;
}

Jet& Jet::operator+=(const Jet& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet Jet::operator*(const Jet& o) const {
  Jet r(order(), PadicNumber::exact_zero(c_[0].prime()));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

Jet& Jet::operator*=(const PadicNumber& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Jet& Jet::operator/=(long d) {
  for (auto& c : c_) c /= d;
  return *this;
}

// ---------------------------------------------------------------------------

Rational classical_L(const DirichletCharacter& chi, long n, BernoulliCache& cache) {
  if (n > 0) throw DomainError("classical_L is only available at s = n <= 0");
  if (n == 0 && chi.modulus() == 1) throw DomainError("pole: trivial character at s = 0 is refused");
  long k = 1 - n;
  Rational v = -gen_bernoulli(k, chi, cache) / k;
  v.canonicalize();
  return v;
}

PadicNumber classical_L_padic(const DirichletCharacter& chi, long n, long p, long precision,
                              BernoulliCache& cache) {
  if (n > 0) throw DomainError("classical_L is only available at s = n <= 0");
  if (n == 0 && chi.modulus() == 1) throw DomainError("pole: trivial character at s = 0 is refused");
  if (chi.is_quadratic()) return PadicNumber::from_rational(p, classical_L(chi, n, cache), precision);
  long k = 1 - n;
  long guard = valuation(Integer(k), p) + 1;
  PadicNumber b = gen_bernoulli_padic(k, chi, p, precision + guard, cache);
  return (-(b / k)).with_precision(precision);
}

Rational lstar(const DirichletCharacter& chi, long n, long p, BernoulliCache& cache) {
  Rational v = classical_L(chi, n, cache);
  if (chi.modulus() % p == 0) return v;
  int c = chi.primitive().value(p);
  Rational factor = 1 - Rational(c) * Rational(ipow(p, -n));
  Rational out = v * factor;
  out.canonicalize();
  return out;
}

PadicNumber lstar_padic(const DirichletCharacter& chi, long n, long p, long precision, BernoulliCache& cache) {
  if (chi.is_quadratic()) return PadicNumber::from_rational(p, lstar(chi, n, p, cache), precision);
  // a Teichmuller part makes p divide the conductor, so there is no factor to remove
  return classical_L_padic(chi, n, p, precision, cache);
}

LSeriesInstance LSeriesInstance::make(const DirichletCharacter& chi, long p, long precision) {
  if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
  if (!chi.is_quadratic()) throw UnsupportedError("only quadratic characters are supported");
  if (!chi.is_odd()) throw DomainError("chi must be odd");
  if (precision < 1) throw PrecisionError("precision must be positive");
  LSeriesInstance inst{chi.primitive(), p, precision};
  if (inst.twisted().primitive().is_trivial())
    throw UnsupportedError("chi omega is trivial: L_p has a pole at s = 1");
  return inst;
}

namespace {

Jet kl_jet(const LSeriesInstance& inst, const PadicNumber& s0, std::optional<long> s_int, long order,
           BernoulliCache& cache) {
  const long p = inst.p;
  const long N = inst.precision;
  DirichletCharacter psi = inst.twisted().primitive();
  if (psi.is_trivial()) throw UnsupportedError("chi omega is trivial");
  const long F = std::lcm(psi.conductor(), p);
  const long vF = valuation(Integer(F), p);

  PadicNumber s0m1 = s0 - PadicNumber::one(p, s0.precision() == PadicNumber::kExact ? N + 40 : s0.precision());
  if (s0m1.is_zero()) throw DomainError("L_p is evaluated away from s = 1");
  const long vs = std::max(0L, -s0m1.valuation()) + std::max(0L, s0m1.valuation());

  const long target = N + vF + 2 + vs * (order + 1);
  long last_fail = 0;
  for (long j = 1; j < 40 * (target + order + 2); ++j)
    if (j * vF - 1 - order * floor_log(j, p) < target) last_fail = j;
  const long J = last_fail + 1;
  const long K = target + factorial_valuation(J, p) + (order + 1) * (floor_log(J, p) + 1) + 4;

  PadicNumber one = PadicNumber::one(p, K);
  PadicNumber s0K = s_int ? PadicNumber::from_integer(p, *s_int, K) : s0.with_precision(K);
  Jet x(order, one - s0K);
  if (order >= 1) x[1] = -one;

  auto B = cache.table(J);
  std::vector<Jet> coef;
  coef.reserve(J + 1);
  Jet b(order, one);
  Integer Fpow = 1;
  for (long j = 0; j <= J; ++j) {
    Jet cj = b;
    cj *= PadicNumber::from_rational(p, B[j] * Rational(Fpow), K);
    coef.push_back(cj);
    Jet shifted = x;
    shifted[0] -= PadicNumber::from_integer(p, j, K);
    b = b * shifted;
    b /= (j + 1);
    Fpow *= F;
  }

  Jet total(order, PadicNumber::exact_zero(p));
  for (long a = 1; a <= F; ++a) {
    if (a % p == 0) continue;
    PadicNumber pa = psi.value_padic(a, p, K);
    if (pa.is_exact_zero()) continue;
    PadicNumber br = angle_bracket(a, p, K);
    PadicNumber la = plog(br);
    PadicNumber pw = s_int ? br.pow(1 - *s_int) : pexp((one - s0K) * la);
    Jet g(order, pw);
    PadicNumber t = pw;
    for (long i = 1; i <= order; ++i) {
      t = -(t * la) / i;
      g[i] = t;
    }
    PadicNumber ainv = PadicNumber::one(p, K) / a;
    PadicNumber apow = PadicNumber::one(p, K);
    Jet inner(order, PadicNumber::exact_zero(p));
    for (long j = 0; j <= J; ++j) {
      Jet term = coef[j];
      term *= apow;
      inner += term;
      apow *= ainv;
    }
    Jet contrib = inner * g;
    contrib *= pa;
    total += contrib;
  }

  // 1 / (s - 1) = 1 / (s0m1 + h)
  PadicNumber c = s_int ? PadicNumber::from_integer(p, *s_int - 1, K) : s0m1.with_precision(K);
  Jet inv(order, c.inverse());
  for (long i = 1; i <= order; ++i) inv[i] = -(inv[i - 1] / c);
  Jet out = total * inv;
  out /= F;
  for (long i = 0; i <= order; ++i) {
    if (out[i].precision() < N)
      throw PrecisionError("L_p series lost digits: coefficient " + std::to_string(i) + " known to " +
                           std::to_string(out[i].precision()));
    out[i] = out[i].with_precision(N);
  }
  return out;
}

}  // namespace

Jet kubota_leopoldt_jet(const LSeriesInstance& inst, const PadicNumber& s0, long order, BernoulliCache& cache) {
  return kl_jet(inst, s0, std::nullopt, order, cache);
}

PadicNumber kubota_leopoldt(const LSeriesInstance& inst, long s, BernoulliCache& cache) {
  if (s == 1) throw DomainError("L_p is evaluated away from s = 1");
  return kl_jet(inst, PadicNumber::from_integer(inst.p, s, inst.precision + 8), s, 0, cache)[0];
}

PadicNumber kubota_leopoldt(const LSeriesInstance& inst, const PadicNumber& s, BernoulliCache& cache) {
  return kl_jet(inst, s, std::nullopt, 0, cache)[0];
}

PadicNumber kubota_leopoldt_difference_quotient(const LSeriesInstance& inst, long m, BernoulliCache& cache) {
  if (m < 1) throw DomainError("difference step exponent must be >= 1");
  LSeriesInstance wide = inst;
  wide.precision = inst.precision + m;
  PadicNumber a = kubota_leopoldt(wide, static_cast<long>(ipow(inst.p, m).get_si()), cache);
  PadicNumber b = kubota_leopoldt(wide, 0, cache);
  return ((a - b) / ipow(inst.p, m)).with_precision(inst.precision);
}

PadicNumber kubota_leopoldt_derivative(const LSeriesInstance& inst, long fd_exponent, BernoulliCache& cache) {
  PadicNumber d = kl_jet(inst, PadicNumber::from_integer(inst.p, 0, inst.precision + 8), 0L, 1, cache)[1];
  if (fd_exponent > 0) {
    PadicNumber fd = kubota_leopoldt_difference_quotient(inst, fd_exponent, cache);
    long bound = std::min(fd_exponent, inst.precision);
    if (discrepancy_valuation(d, fd) < bound)
      throw ConsistencyError("L_p' disagrees with its difference quotient: " + d.to_string() + " vs " +
                             fd.to_string());
  }
  return d;
}

LpReport analytic_invariant(const LSeriesInstance& inst, BernoulliCache& cache) {
  LpReport rep;
  rep.r = inst.r();
  rep.no_exceptional_zero = rep.r == 0;
  Jet j = kl_jet(inst, PadicNumber::from_integer(inst.p, 0, inst.precision + 8), 0L, 1, cache);
  rep.value_at_0 = j[0];
  rep.derivative_at_0 = kubota_leopoldt_derivative(inst, 2, cache);
  rep.classical_at_0 = classical_L(inst.chi, 0, cache);
  PadicNumber L0 = PadicNumber::from_rational(inst.p, rep.classical_at_0, inst.precision + 8);
  if (rep.r == 1) {
    rep.analytic_invariant = rep.derivative_at_0 / L0;
  } else {
    Rational euler = 1 - Rational(inst.chi_at_p());
    rep.analytic_invariant = rep.value_at_0 / (L0 * PadicNumber::from_rational(inst.p, euler, inst.precision + 8));
  }
  return rep;
}

OrderProbe order_probe(const LSeriesInstance& inst, long max_order, BernoulliCache& cache) {
  if (inst.precision < 2) throw PrecisionError("order probe declines below 2 digits");
  if (max_order < 0) throw DomainError("max_order must be >= 0");
  Jet j = kl_jet(inst, PadicNumber::from_integer(inst.p, 0, inst.precision + 8), 0L, max_order, cache);
  OrderProbe out;
  for (long i = 0; i <= max_order; ++i) {
    if (!j[i].is_zero()) {
      out.first_nonzero = i;
      break;
    }
    out.vanishing = i + 1;
  }
  return out;
}

}  // namespace gstark
