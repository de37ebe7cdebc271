#pragma once

#include <string>
#include <vector>

#include "gstark/bernoulli.hpp"
#include "gstark/lfunction.hpp"

namespace gstark {

// Context needed to turn rationals and character values into scalars.
struct ScalarContext {
  long p = 0;
  long precision = 0;
};

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational from_rational(const Rational& q, const ScalarContext&) { return q; }
  static Rational character(const DirichletCharacter& chi, const Integer& a, const ScalarContext&) {
    return chi.value(a);
  }
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::string str(const Rational& x) { return to_string(x); }
};

template <>
struct ScalarOps<PadicNumber> {
  static PadicNumber from_rational(const Rational& q, const ScalarContext& ctx) {
    return PadicNumber::from_rational(ctx.p, q, ctx.precision);
  }
  static PadicNumber character(const DirichletCharacter& chi, const Integer& a, const ScalarContext& ctx) {
    return chi.value_padic(a, ctx.p, ctx.precision);
  }
  static bool is_zero(const PadicNumber& x) { return x.is_zero(); }
  static std::string str(const PadicNumber& x) { return x.to_string(); }
};

// q-expansion sum_{n=0}^{N} c(n) q^n of a form of given weight, nebentypus
// and level.  Coefficients past reliable_to are not trustworthy.
template <class S>
struct QExpansion {
  long weight = 0;
  DirichletCharacter character;
  long level = 1;
  std::vector<S> coeffs;
  long reliable_to = -1;

  long size() const { return static_cast<long>(coeffs.size()); }
  const S& operator[](long n) const { return coeffs.at(n); }
};

// E_k(1, eta): c(n) = sum_{d | n} eta(d) d^(k-1) where eta is evaluated with its
// modulus (so eta(d) = 0 when d shares a prime with it), and
// c(0) = L(eta, 1 - k) / 2 with the same Euler factors.
template <class S>
QExpansion<S> eisenstein(long k, const DirichletCharacter& eta, long nq, const ScalarContext& ctx = {},
                         BernoulliCache& cache = BernoulliCache::shared());
// E_k(eta, psi): c(n) = sum_{d | n} eta(n/d) psi(d) d^(k-1), c(0) = 0 for
// nontrivial eta.
template <class S>
QExpansion<S> eisenstein_two_char(long k, const DirichletCharacter& eta, const DirichletCharacter& psi, long nq,
                                  const ScalarContext& ctx = {}, BernoulliCache& cache = BernoulliCache::shared());

template <class S>
QExpansion<S> hecke_T(long ell, const QExpansion<S>& f, const ScalarContext& ctx = {});
template <class S>
QExpansion<S> hecke_U(long ell, const QExpansion<S>& f);

template <class S>
QExpansion<S> add(const QExpansion<S>& a, const QExpansion<S>& b);
template <class S>
QExpansion<S> subtract(const QExpansion<S>& a, const QExpansion<S>& b);
template <class S>
QExpansion<S> multiply(const QExpansion<S>& a, const QExpansion<S>& b);
template <class S>
QExpansion<S> scale(const QExpansion<S>& a, const S& c);

QExpansion<PadicNumber> to_padic(const QExpansion<Rational>& f, const ScalarContext& ctx);

// {weight, character, modulus, coeffs: ["num/den", ...], reliable_to}
std::string expansion_json(const QExpansion<Rational>& f);

struct UpRelationReport {
  bool applicable = false;     // chi(p) = 1
  bool new_prime_holds = false;  // (U_p - 1) E_1(1, chi_J) = E_1(1, chi_{J+p}), p not in J
  bool in_j_holds = false;       // (U_p - 1) E_1(1, chi_J) = 0, p in J
  bool square_vanishes = false;  // (U_p - 1)^2 E_1(1, chi) = 0 when chi(p) = 1
  long compared = 0;             // number of coefficients compared
};

// Checks the U_p relations for E_1(1, chi_J) with J = {} and J = {p}.
UpRelationReport verify_up_relation(const DirichletCharacter& chi, long p, long nq,
                                    BernoulliCache& cache = BernoulliCache::shared());

struct FkResult {
  int kase = 1;  // 1 when chi(p) != 1, 2 when chi(p) = 1
  QExpansion<PadicNumber> form;
  PadicNumber lp_value;   // L_p(chi omega, 1 - k) from the series
  PadicNumber w_k;        // case 2 only: W_k, equal to 1 for quadratic chi
  PadicNumber rho;        // L_p(chi omega, 1 - k) / L(chi_{R'}, 0) (case 1) or / L(chi, 0)
  PadicNumber constant_term() const { return form.coeffs.at(0); }
};

// The weight-k combination with vanishing constant term at infinity.  G_{k-1}
// is E_{k-1}(1, omega^(1-k)) scaled to constant term 1.
FkResult build_Fk(long k, const DirichletCharacter& chi, long p, long nq, long precision,
                  BernoulliCache& cache = BernoulliCache::shared());

}  // namespace gstark
