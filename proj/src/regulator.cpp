#include "gstark/regulator.hpp"

#include "json.hpp"

#include "gstark/cornacchia.hpp"
#include "gstark/dirichlet.hpp"

namespace gstark {

namespace {

std::vector<long> digits(const Integer& a, long p, long n) {
  std::vector<long> out;
  Integer r = a;
  for (long i = 0; i < n; ++i) {
    Integer q, rem;
    mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p));
    out.push_back(rem.get_si());
    r = q;
  }
  return out;
}

}  // namespace

std::string PUnitCertificate::to_json() const {
  nlohmann::json j;
  j["d"] = d;
  j["p"] = p;
  j["h"] = h;
  j["x"] = x.get_str();
  j["y"] = y.get_str();
  j["w_mod_pN"] = w.residue().get_str();
  j["o"] = o;
  // base-p digits of ell mod p^N, least significant first
  j["ell_digits"] = digits(ell.residue(), p, ell.precision());
  return j.dump();
}

Measurement measure(long d, long p, const Integer& x, const Integer& y, const PadicNumber& w, long precision) {
  if (precision < 2) throw PrecisionError("measure needs precision >= 2");
  PadicNumber xw = PadicNumber::from_integer(p, x, w.precision());
  PadicNumber yw = w * y;
  PadicNumber half = PadicNumber::from_rational(p, Rational(1, 2), w.precision());
  PadicNumber a = (xw + yw) * half;
  PadicNumber b = (xw - yw) * half;
  if (a.is_zero() || b.is_zero()) throw PrecisionError("embedding of the generator vanishes to working precision");
  (void)d;
  Measurement m;
  m.o = a.valuation() - b.valuation();
  PadicNumber ell = plog(a) - plog(b);
  m.ell = ell.with_precision(std::min(precision, ell.precision()));
  return m;
}

PUnitCertificate find_p_unit(long d, long p, long precision, long h_max) {
  if (!is_fundamental_discriminant(d) || d >= 0) throw DomainError("d must be a negative fundamental discriminant");
  if (p == 2 || !is_prime(p)) throw DomainError("p must be an odd prime");
  if (kronecker(d, p) != 1) throw DomainError("p is not split in Q(sqrt(d))");
  for (long h = 1; h <= h_max; ++h) {
    Integer m = ipow(p, h);
    auto sol = cornacchia(Integer(-d), m);
    if (!sol) continue;
    PUnitCertificate c;
    c.d = d;
    c.p = p;
    c.h = h;
    c.x = sol->first;
    c.y = sol->second;
    // the generator has valuation up to h in one embedding
    c.w = hensel_sqrt(d, p, precision + h + 2);
    Measurement ms = measure(d, p, c.x, c.y, c.w, precision);
    if (std::abs(ms.o) != h) throw ConsistencyError("generator is not primitive");
    c.o = ms.o;
    c.ell = ms.ell;
    return c;
  }
  throw SearchBoundError("no generator of p^h found for h <= " + std::to_string(h_max));
}

PUnitCertificate swap_root(const PUnitCertificate& c) {
  PUnitCertificate s = c;
  s.w = -c.w;
  Measurement ms = measure(s);
  s.o = ms.o;
  s.ell = ms.ell.with_precision(c.ell.precision());
  return s;
}

PadicNumber gross_regulator_rank1(const PUnitCertificate& c) {
  if (c.o == 0) throw DegenerateError("o(u) = 0");
  return -c.ell / Integer(c.o);
}

PadicNumber gross_regulator_general(const Matrix<Integer>& o, const Matrix<PadicNumber>& ell) {
  const std::size_t r = o.size();
  if (r == 0 || ell.size() != r) throw DomainError("regulator needs two r x r matrices");
  Matrix<Rational> oq(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (o[i].size() != r || ell[i].size() != r) throw DomainError("regulator needs two r x r matrices");
    for (const auto& v : o[i]) oq[i].push_back(Rational(v));
  }
  Rational det_o = leibniz_det(oq, Rational(0));
  if (det_o == 0) throw DomainError("det(o) = 0");
  Matrix<PadicNumber> neg = ell;
  for (auto& row : neg)
    for (auto& x : row) x = -x;
  PadicNumber det_l = leibniz_det(neg, PadicNumber::exact_zero(ell[0][0].prime()));
  return det_l * Integer(det_o.get_den()) / Integer(det_o.get_num());
}

}  // namespace gstark
