#include "gstark/qexp.hpp"

#include <numeric>
#include <type_traits>

#include "json.hpp"

namespace gstark {

namespace {

template <class S>
S half_L(const DirichletCharacter& eta, long n, const ScalarContext& ctx, BernoulliCache& cache) {
  if constexpr (std::is_same_v<S, Rational>) {
    Rational v = classical_L(eta, n, cache) / 2;
    v.canonicalize();
    return v;
  } else {
    return classical_L_padic(eta, n, ctx.p, ctx.precision + 1, cache).with_precision(ctx.precision + 1) / 2;
  }
}

template <class S>
S zero_scalar(const ScalarContext& ctx) {
  if constexpr (std::is_same_v<S, Rational>)
    return Rational(0);
  else
    return PadicNumber::exact_zero(ctx.p);
}

template <class S>
S zero_like(const S& x) {
  if constexpr (std::is_same_v<S, Rational>)
    return Rational(0);
  else
    return PadicNumber::exact_zero(x.prime());
}

template <class S>
S times_integer(const S& x, const Integer& c) {
  if constexpr (std::is_same_v<S, Rational>)
    return x * Rational(c);
  else
    return x * c;
}

void check_parity(long k, const DirichletCharacter& chi) {
  int want = (k % 2 == 0) ? 1 : -1;
  if (chi.parity() != want)
    throw DomainError("parity mismatch: " + chi.to_string() + " at weight " + std::to_string(k));
}

}  // namespace

template <class S>
QExpansion<S> eisenstein(long k, const DirichletCharacter& eta, long nq, const ScalarContext& ctx,
                         BernoulliCache& cache) {
  if (k < 1) throw DomainError("weight must be >= 1");
  if (nq < 1) throw DomainError("need at least one coefficient past the constant term");
  check_parity(k, eta);
  if (k == 2 && eta.modulus() == 1) throw UnsupportedError("E_2 of level 1 is not modular");
  QExpansion<S> f;
  f.weight = k;
  f.character = eta;
  f.level = eta.modulus();
  f.reliable_to = nq;
  f.coeffs.assign(nq + 1, zero_scalar<S>(ctx));
  f.coeffs[0] = half_L<S>(eta, 1 - k, ctx, cache);
  for (long d = 1; d <= nq; ++d) {
    S c = ScalarOps<S>::character(eta, d, ctx);
    if (ScalarOps<S>::is_zero(c)) continue;
    c = times_integer(c, ipow(d, k - 1));
    for (long n = d; n <= nq; n += d) f.coeffs[n] += c;
  }
  return f;
}

template <class S>
QExpansion<S> eisenstein_two_char(long k, const DirichletCharacter& eta, const DirichletCharacter& psi, long nq,
                                  const ScalarContext& ctx, BernoulliCache& cache) {
  if (eta.modulus() == 1) return eisenstein<S>(k, psi, nq, ctx, cache);
  if (k < 1) throw DomainError("weight must be >= 1");
  if (nq < 1) throw DomainError("need at least one coefficient past the constant term");
  DirichletCharacter neb = eta * psi;
  check_parity(k, neb);
  QExpansion<S> f;
  f.weight = k;
  f.character = neb;
  f.level = eta.modulus() * psi.modulus();
  f.reliable_to = nq;
  f.coeffs.assign(nq + 1, zero_scalar<S>(ctx));
  std::vector<S> eta_vals(nq + 1, zero_scalar<S>(ctx));
  for (long m = 1; m <= nq; ++m) eta_vals[m] = ScalarOps<S>::character(eta, m, ctx);
  for (long d = 1; d <= nq; ++d) {
    S c = ScalarOps<S>::character(psi, d, ctx);
    if (ScalarOps<S>::is_zero(c)) continue;
    c = times_integer(c, ipow(d, k - 1));
    for (long n = d; n <= nq; n += d) {
      const S& e = eta_vals[n / d];
      if (ScalarOps<S>::is_zero(e)) continue;
      f.coeffs[n] += e * c;
    }
  }
  return f;
}

template <class S>
QExpansion<S> hecke_T(long ell, const QExpansion<S>& f, const ScalarContext& ctx) {
  if (!is_prime(ell)) throw DomainError("T_ell needs a prime ell");
  if (f.level % ell == 0) throw DomainError("T_ell needs ell prime to the level; use U_ell");
  if (f.reliable_to < ell) throw PrecisionError("not enough coefficients for T_" + std::to_string(ell));
  long R = f.reliable_to / ell;
  S twist = times_integer(ScalarOps<S>::character(f.character, ell, ctx), ipow(ell, f.weight - 1));
  QExpansion<S> g = f;
  g.reliable_to = R;
  g.coeffs.assign(R + 1, zero_scalar<S>(ctx));
  for (long n = 0; n <= R; ++n) {
    g.coeffs[n] = f.coeffs[n * ell];
    if (n % ell == 0) g.coeffs[n] += twist * f.coeffs[n / ell];
  }
  return g;
}

template <class S>
QExpansion<S> hecke_U(long ell, const QExpansion<S>& f) {
  if (ell < 2) throw DomainError("U_ell needs ell >= 2");
  if (f.reliable_to < ell) throw PrecisionError("not enough coefficients for U_" + std::to_string(ell));
  long R = f.reliable_to / ell;
  QExpansion<S> g = f;
  g.reliable_to = R;
  g.coeffs.resize(R + 1);
  for (long n = 0; n <= R; ++n) g.coeffs[n] = f.coeffs[n * ell];
  return g;
}

template <class S>
QExpansion<S> add(const QExpansion<S>& a, const QExpansion<S>& b) {
  QExpansion<S> c = a;
  c.reliable_to = std::min(a.reliable_to, b.reliable_to);
  c.coeffs.resize(c.reliable_to + 1);
  c.level = std::lcm(a.level, b.level);
  for (long n = 0; n <= c.reliable_to; ++n) c.coeffs[n] += b.coeffs[n];
  return c;
}

template <class S>
QExpansion<S> subtract(const QExpansion<S>& a, const QExpansion<S>& b) {
  QExpansion<S> c = a;
  c.reliable_to = std::min(a.reliable_to, b.reliable_to);
  c.coeffs.resize(c.reliable_to + 1);
  c.level = std::lcm(a.level, b.level);
  for (long n = 0; n <= c.reliable_to; ++n) c.coeffs[n] -= b.coeffs[n];
  return c;
}

template <class S>
QExpansion<S> multiply(const QExpansion<S>& a, const QExpansion<S>& b) {
  QExpansion<S> c;
  c.weight = a.weight + b.weight;
  c.character = a.character * b.character;
  c.level = std::lcm(a.level, b.level);
  c.reliable_to = std::min(a.reliable_to, b.reliable_to);
  c.coeffs.assign(c.reliable_to + 1, zero_like(a.coeffs[0]));
  for (long i = 0; i <= c.reliable_to; ++i) {
    if (ScalarOps<S>::is_zero(a.coeffs[i])) continue;
    for (long j = 0; i + j <= c.reliable_to; ++j) c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return c;
}

template <class S>
QExpansion<S> scale(const QExpansion<S>& a, const S& s) {
  QExpansion<S> c = a;
  for (auto& x : c.coeffs) x *= s;
  return c;
}

QExpansion<PadicNumber> to_padic(const QExpansion<Rational>& f, const ScalarContext& ctx) {
  QExpansion<PadicNumber> g;
  g.weight = f.weight;
  g.character = f.character;
  g.level = f.level;
  g.reliable_to = f.reliable_to;
  for (const auto& c : f.coeffs) g.coeffs.push_back(PadicNumber::from_rational(ctx.p, c, ctx.precision));
  return g;
}

std::string expansion_json(const QExpansion<Rational>& f) {
  nlohmann::json j;
  j["weight"] = f.weight;
  j["character"] = f.character.to_string();
  j["modulus"] = f.level;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(to_string(c));
  j["coeffs"] = coeffs;
  j["reliable_to"] = f.reliable_to;
  return j.dump();
}

template QExpansion<Rational> eisenstein(long, const DirichletCharacter&, long, const ScalarContext&,
                                         BernoulliCache&);
template QExpansion<PadicNumber> eisenstein(long, const DirichletCharacter&, long, const ScalarContext&,
                                            BernoulliCache&);
template QExpansion<Rational> eisenstein_two_char(long, const DirichletCharacter&, const DirichletCharacter&, long,
                                                  const ScalarContext&, BernoulliCache&);
template QExpansion<PadicNumber> eisenstein_two_char(long, const DirichletCharacter&, const DirichletCharacter&,
                                                     long, const ScalarContext&, BernoulliCache&);
template QExpansion<Rational> hecke_T(long, const QExpansion<Rational>&, const ScalarContext&);
template QExpansion<PadicNumber> hecke_T(long, const QExpansion<PadicNumber>&, const ScalarContext&);
template QExpansion<Rational> hecke_U(long, const QExpansion<Rational>&);
template QExpansion<PadicNumber> hecke_U(long, const QExpansion<PadicNumber>&);
template QExpansion<Rational> add(const QExpansion<Rational>&, const QExpansion<Rational>&);
template QExpansion<PadicNumber> add(const QExpansion<PadicNumber>&, const QExpansion<PadicNumber>&);
template QExpansion<Rational> subtract(const QExpansion<Rational>&, const QExpansion<Rational>&);
template QExpansion<PadicNumber> subtract(const QExpansion<PadicNumber>&, const QExpansion<PadicNumber>&);
template QExpansion<Rational> multiply(const QExpansion<Rational>&, const QExpansion<Rational>&);
template QExpansion<PadicNumber> multiply(const QExpansion<PadicNumber>&, const QExpansion<PadicNumber>&);
template QExpansion<Rational> scale(const QExpansion<Rational>&, const Rational&);
template QExpansion<PadicNumber> scale(const QExpansion<PadicNumber>&, const PadicNumber&);

// ---------------------------------------------------------------------------

UpRelationReport verify_up_relation(const DirichletCharacter& chi, long p, long nq, BernoulliCache& cache) {
  if (!chi.is_quadratic() || !chi.is_odd()) throw DomainError("verify_up_relation needs an odd quadratic chi");
  if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
  UpRelationReport rep;
  rep.applicable = chi.primitive().value(p) == 1;
  auto e_empty = eisenstein<Rational>(1, chi.primitive(), nq, {}, cache);
  auto e_p = eisenstein<Rational>(1, chi.primitive().raise_modulus({p}), nq, {}, cache);
  auto lhs = subtract(hecke_U(p, e_empty), e_empty);
  auto lhs_p = subtract(hecke_U(p, e_p), e_p);
  rep.compared = lhs.reliable_to + 1;
  rep.new_prime_holds = true;
  rep.in_j_holds = true;
  for (long n = 0; n <= lhs.reliable_to; ++n) {
    if (lhs.coeffs[n] != e_p.coeffs[n]) rep.new_prime_holds = false;
    if (lhs_p.coeffs[n] != 0) rep.in_j_holds = false;
  }
  auto sq = subtract(hecke_U(p, lhs), lhs);
  rep.square_vanishes = true;
  for (long n = 0; n <= sq.reliable_to; ++n)
    if (sq.coeffs[n] != 0) rep.square_vanishes = false;
  return rep;
}

FkResult build_Fk(long k, const DirichletCharacter& chi, long p, long nq, long precision, BernoulliCache& cache) {
  if (k < 2) throw DomainError("build_Fk needs k >= 2");
  if (!chi.is_quadratic() || !chi.is_odd()) throw DomainError("build_Fk needs an odd quadratic chi");
  const long K = precision + 6;
  const ScalarContext ctx{p, K};
  const DirichletCharacter chi0 = chi.primitive();
  auto inst = LSeriesInstance::make(chi0, p, K);

  FkResult out;
  out.kase = chi0.value(p) == 1 ? 2 : 1;
  out.lp_value = kubota_leopoldt(inst, 1 - k, cache);

  auto ek = eisenstein<PadicNumber>(k, chi0.teichmuller_twist(p, 1 - k), nq, ctx, cache);
  auto psi = DirichletCharacter::teichmuller_power(p, 1 - k);
  auto eg = eisenstein<PadicNumber>(k - 1, psi, nq, ctx, cache);
  if (eg.coeffs[0].is_zero()) throw DegenerateError("constant term of E_{k-1}(1, omega^(1-k)) vanishes");
  auto g = scale(eg, eg.coeffs[0].inverse());

  DirichletCharacter chi_r = out.kase == 1 ? chi0.raise_modulus({p}) : chi0;
  Rational l_r = classical_L(chi_r, 0, cache);
  if (l_r == 0) throw DegenerateError("L(chi_{R'}, 0) vanishes");
  out.rho = out.lp_value / PadicNumber::from_rational(p, l_r, K);
  auto e1 = eisenstein<PadicNumber>(1, chi_r, nq, ctx, cache);
  auto form = subtract(ek, scale(multiply(e1, g), out.rho));

  if (out.kase == 2) {
    auto inst_inv = LSeriesInstance::make(chi0.inverse(), p, K);
    PadicNumber lp_inv = kubota_leopoldt(inst_inv, 1 - k, cache);
    if (lp_inv.is_zero()) throw DegenerateError("L_p(chi^-1 omega, 1 - k) vanishes");
    PadicNumber l_inv = PadicNumber::from_rational(p, classical_L(chi0.inverse(), 0, cache), K);
    out.w_k = out.rho * l_inv / lp_inv;
    auto e2 = eisenstein_two_char<PadicNumber>(k, chi0, psi, nq, ctx, cache);
    form = add(form, scale(e2, out.w_k));
    out.w_k = out.w_k.with_precision(precision);
  }
  for (auto& c : form.coeffs) c = c.with_precision(precision);
  out.form = std::move(form);
  out.lp_value = out.lp_value.with_precision(precision);
  out.rho = out.rho.with_precision(precision);
  return out;
}

}  // namespace gstark
