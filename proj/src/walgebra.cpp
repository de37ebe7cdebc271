#include "gstark/walgebra.hpp"

#include <sstream>

namespace gstark {

std::string WMonomial::label() const {
  if (eps) {
    std::string s;
    for (int i = 0; i < 32; ++i)
      if (eps & (1u << i)) s += "e" + std::to_string(i + 1);
    return s;
  }
  if (pi == 0 && y == 0) return "1";
  std::string s;
  if (pi) s += pi == 1 ? "pi" : "pi^" + std::to_string(pi);
  if (y) {
    if (!s.empty()) s += "*";
    s += y == 1 ? "y" : "y^" + std::to_string(y);
  }
  return s;
}

namespace {

// higher keys are eliminated first
std::tuple<int, int, int, int, unsigned> elimination_rank(const WMonomial& m) {
  int cls = m.pi > 0 ? 2 : (m.eps ? 1 : 0);
  return {m.degree(), cls, m.pi, m.y, m.eps};
}

template <class F>
bool fz(const F& x) {
  return is_zero(x);
}

// Sparse echelon form; column keys are elimination positions, smallest first.
template <class F>
class Echelon {
 public:
  using Row = std::map<long, F>;
  explicit Echelon(F zero) : zero_(std::move(zero)) {}

  void add(Row row) {
    reduce(row);
    if (row.empty()) return;
    F inv = row.begin()->second;
    for (auto& kv : row) kv.second = kv.second / inv;
    long lead = row.begin()->first;
    piv_.emplace(lead, std::move(row));
  }

  void reduce(Row& row) const {
    auto it = row.begin();
    while (it != row.end()) {
      if (fz(it->second)) {
        it = row.erase(it);
        continue;
      }
      auto pv = piv_.find(it->first);
      if (pv == piv_.end()) {
        ++it;
        continue;
      }
      F f = it->second;
      for (const auto& kv : pv->second) {
        if (kv.first == it->first) continue;
        auto slot = row.emplace(kv.first, zero_).first;
        slot->second = slot->second - f * kv.second;
      }
      it = row.erase(it);
    }
  }

  bool is_pivot(long key) const { return piv_.count(key) > 0; }

 private:
  F zero_;
  std::map<long, Row> piv_;
};

}  // namespace

template <class F>
WAlgebra<F>::WAlgebra(WParams<F> params) : params_(std::move(params)) {
  const auto& P = params_;
  if (P.r < 1 || P.r > 16) throw ConstructionError("rank r must be in [1, 16]");
  if (P.kase == 1 || P.kase == 2) {
    if (P.r_an < P.r) throw ConstructionError("need r_an >= r");
    if (P.kase == 2 && is_zero(P.W)) throw ConstructionError("case 2 needs nu_1(W) != 0");
    pi_cap_ = P.r_an;
    y_cap_ = P.kase == 2 ? P.r_an : 0;
  } else if (P.kase == 3) {
    if (!(P.s > P.t)) throw ConstructionError("case 3 needs s > t");
    if (P.t < 1) throw ConstructionError("case 3 needs t >= 1; t = 0 collapses the algebra");
    if (P.s < P.r) throw ConstructionError("case 3 needs s >= r");
    if (is_zero(P.W)) throw ConstructionError("case 3 needs a unit w");
    pi_cap_ = P.s;
    y_cap_ = P.t;
  } else {
    throw ConstructionError("case must be 1, 2 or 3");
  }

  for (int a = 0; a <= pi_cap_; ++a)
    for (int b = 0; b <= y_cap_; ++b) ambient_.push_back({a, b, 0});
  for (unsigned m = 1; m < (1u << P.r); ++m) ambient_.push_back({0, 0, m});
  for (std::size_t i = 0; i < ambient_.size(); ++i) index_[ambient_[i]] = static_cast<long>(i);
  const std::size_t n = ambient_.size();
  const F zero = fzero();
  const F& one = P.one;

  // elimination position of each ambient monomial
  std::vector<long> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](long a, long b) {
    return elimination_rank(ambient_[a]) > elimination_rank(ambient_[b]);
  });
  std::vector<long> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<long>(i);

  using Gen = std::vector<std::pair<WMonomial, F>>;
  std::vector<Gen> gens;
  const unsigned full = (1u << P.r) - 1;
  const int R = static_cast<int>(P.kase == 3 ? P.s : P.r_an);
  const F sign = (R % 2 == 0) ? one : F(-one);
  if (P.kase >= 2) gens.push_back({{{1, 1, 0}, one}, {{0, 2, 0}, -one}});
  if (P.kase == 2) gens.push_back({{{R, 0, 0}, P.W}, {{0, R, 0}, -(P.W + one)}});
  if (P.kase == 3) gens.push_back({{{R, 0, 0}, P.W}, {{0, static_cast<int>(P.t), 0}, -one}});
  {
    Gen g{{{0, 0, full}, one}, {{R, 0, 0}, sign * P.L}};
    if (P.kase == 2) g.push_back({{0, R, 0}, -(sign * P.L)});
    gens.push_back(g);
  }

  Echelon<F> ideal(zero);
  for (const auto& g : gens)
    for (const auto& m : ambient_) {
      typename Echelon<F>::Row row;
      for (const auto& [mono, c] : g) {
        WMonomial prod;
        if (!mono_product(m, mono, prod)) continue;
        auto slot = row.emplace(pos[ambient_index(prod)], zero).first;
        slot->second = slot->second + c;
      }
      if (!row.empty()) ideal.add(std::move(row));
    }

  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (!ideal.is_pivot(pos[*it])) basis_.push_back(*it);
  std::map<long, long> basis_of_pos;
  for (std::size_t i = 0; i < basis_.size(); ++i) basis_of_pos[pos[basis_[i]]] = static_cast<long>(i);

  nf_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    typename Echelon<F>::Row row{{pos[j], one}};
    ideal.reduce(row);
    for (const auto& [k, c] : row) nf_[j].push_back({basis_of_pos.at(k), c});
  }
  if (basis_.size() <= 24 && !check_associative_commutative())
    throw ConsistencyError("multiplication table is not associative and commutative");
}

template <class F>
long WAlgebra<F>::ambient_index(const WMonomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw DomainError("monomial " + m.label() + " is outside the ambient space");
  return it->second;
}

template <class F>
bool WAlgebra<F>::mono_product(const WMonomial& a, const WMonomial& b, WMonomial& out) const {
  if (a.eps && b.eps) {
    if (a.eps & b.eps) return false;
    out = {0, 0, a.eps | b.eps};
    return true;
  }
  if (a.eps) {
    if (b.pi || b.y) return false;
    out = a;
    return true;
  }
  if (b.eps) {
    if (a.pi || a.y) return false;
    out = b;
    return true;
  }
  int pa = a.pi + b.pi, yb = a.y + b.y;
  if (pa > pi_cap_ || yb > y_cap_) return false;
  out = {pa, yb, 0};
  return true;
}

template <class F>
std::vector<WMonomial> WAlgebra<F>::basis() const {
  std::vector<WMonomial> out;
  for (long j : basis_) out.push_back(ambient_[j]);
  return out;
}

template <class F>
std::vector<std::string> WAlgebra<F>::basis_labels() const {
  std::vector<std::string> out;
  for (long j : basis_) out.push_back(ambient_[j].label());
  return out;
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::zero() const {
  Element e;
  e.alg_ = this;
  e.c_.assign(basis_.size(), fzero());
  return e;
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::scalar(const F& c) const {
  Element e = monomial({0, 0, 0});
  for (auto& x : e.c_) x = x * c;
  return e;
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::monomial(const WMonomial& m) const {
  Element e = zero();
  if (m.eps && (m.pi || m.y)) return e;
  if (m.pi > pi_cap_ || m.y > y_cap_) return e;
  if (m.eps >= (1u << params_.r)) throw DomainError("epsilon index out of range");
  for (const auto& [k, c] : nf_[ambient_index(m)]) e.c_[k] = c;
  return e;
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::y() const {
  if (params_.kase == 1) throw DomainError("case 1 has no generator y");
  return monomial({0, 1, 0});
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::eps(long i) const {
  if (i < 1 || i > params_.r) throw DomainError("epsilon index out of range");
  return monomial({0, 0, 1u << (i - 1)});
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::eps_product() const {
  return monomial({0, 0, (1u << params_.r) - 1});
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::multiply(const Element& a, const Element& b) const {
  if (a.alg_ != this || b.alg_ != this) throw DomainError("elements of different algebras");
  Element out = zero();
  const std::size_t d = basis_.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (fz(a.c_[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (fz(b.c_[j])) continue;
      WMonomial prod;
      if (!mono_product(ambient_[basis_[i]], ambient_[basis_[j]], prod)) continue;
      F f = a.c_[i] * b.c_[j];
      for (const auto& [k, c] : nf_[ambient_index(prod)]) out.c_[k] = out.c_[k] + f * c;
    }
  }
  return out;
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::power(const Element& a, long n) const {
  if (n < 0) throw DomainError("negative power");
  Element acc = one();
  for (long i = 0; i < n; ++i) acc = multiply(acc, a);
  return acc;
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::reduce_mod_max_power(const Element& a, long k) const {
  if (a.alg_ != this) throw DomainError("element of a different algebra");
  // keys are basis positions from the top, so higher monomials lead
  const long d = static_cast<long>(basis_.size());
  Echelon<F> sub(fzero());
  for (std::size_t j = 0; j < ambient_.size(); ++j) {
    if (ambient_[j].degree() < k) continue;
    typename Echelon<F>::Row row;
    for (const auto& [i, c] : nf_[j]) row.emplace(d - 1 - i, c);
    if (!row.empty()) sub.add(std::move(row));
  }
  typename Echelon<F>::Row row;
  for (long i = 0; i < d; ++i)
    if (!fz(a.c_[i])) row.emplace(d - 1 - i, a.c_[i]);
  sub.reduce(row);
  Element out = zero();
  for (const auto& [key, c] : row) out.c_[d - 1 - key] = c;
  return out;
}

template <class F>
bool WAlgebra<F>::check_associative_commutative() const {
  const std::size_t d = basis_.size();
  std::vector<Element> b;
  for (long j : basis_) b.push_back(monomial(ambient_[j]));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (!(b[i] * b[j] == b[j] * b[i])) return false;
      for (std::size_t k = 0; k < d; ++k)
        if (!((b[i] * b[j]) * b[k] == b[i] * (b[j] * b[k]))) return false;
    }
  return true;
}

template <class F>
bool WAlgebra<F>::check_nilpotent() const {
  std::vector<Element> gens{pi()};
  if (params_.kase != 1) gens.push_back(y());
  for (long i = 1; i <= params_.r; ++i) gens.push_back(eps(i));
  const long m = nilpotency_bound() + 1;
  // all multisets of size m from gens
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    Element prod = one();
    for (auto i : idx) prod = prod * gens[i];
    if (!prod.is_zero()) return false;
    long pos = m - 1;
    while (pos >= 0 && idx[pos] == gens.size() - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (long q = pos + 1; q < m; ++q) idx[q] = idx[pos];
  }
  return true;
}

template <class F>
bool WAlgebra<F>::Element::is_zero() const {
  for (const auto& x : c_)
    if (!fz(x)) return false;
  return true;
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::Element::operator+(const Element& o) const {
  if (alg_ != o.alg_) throw DomainError("elements of different algebras");
  Element e = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) e.c_[i] = e.c_[i] + o.c_[i];
  return e;
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::Element::operator-(const Element& o) const {
  if (alg_ != o.alg_) throw DomainError("elements of different algebras");
  Element e = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) e.c_[i] = e.c_[i] - o.c_[i];
  return e;
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::Element::operator-() const {
  Element e = *this;
  for (auto& x : e.c_) x = -x;
  return e;
}

template <class F>
typename WAlgebra<F>::Element WAlgebra<F>::Element::operator*(const F& s) const {
  Element e = *this;
  for (auto& x : e.c_) x = x * s;
  return e;
}

template <class F>
std::string WAlgebra<F>::Element::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (fz(c_[i])) continue;
    if (!first) os << " + ";
    first = false;
    using gstark::to_string;
    os << "(" << to_string(c_[i]) << ")*" << alg_->ambient_[alg_->basis_[i]].label();
  }
  return first ? "0" : os.str();
}

template class WAlgebra<Rational>;
template class WAlgebra<RationalFunction>;
template class WAlgebra<PadicNumber>;

// ---------------------------------------------------------------------------

template <class F>
typename WAlgebra<F>::Element regulator_determinant(const WAlgebra<F>& W, const Matrix<F>& o, const Matrix<F>& l) {
  const long r = W.params().r;
  if (static_cast<long>(o.size()) != r || static_cast<long>(l.size()) != r)
    throw DomainError("matrices must be r x r");
  typename WAlgebra<F>::Element X;
  switch (W.params().kase) {
    case 1: X = W.pi(); break;
    case 2: X = W.pi() - W.y(); break;
    default: X = W.y(); break;
  }
  Matrix<typename WAlgebra<F>::Element> m(r);
  for (long i = 0; i < r; ++i) {
    if (static_cast<long>(o[i].size()) != r || static_cast<long>(l[i].size()) != r)
      throw DomainError("matrices must be r x r");
    for (long j = 0; j < r; ++j) m[i].push_back(X * l[i][j] + W.eps(i + 1) * o[i][j]);
  }
  return leibniz_det(m, W.zero());
}

template <class F>
DetIdentityReport<F> check_det_identity(const WAlgebra<F>& W, const Matrix<F>& o, const Matrix<F>& l) {
  const auto& P = W.params();
  const long r = P.r;
  const F zero = P.one * 0L;
  const F det_l = leibniz_det(l, zero);
  const F det_o = leibniz_det(o, zero);
  DetIdentityReport<F> rep;
  auto D = regulator_determinant(W, o, l);
  auto pi = W.pi();
  typename WAlgebra<F>::Element lead, tail;
  if (P.kase == 1) {
    lead = W.power(pi, r);
    long R = P.r_an;
    F sgn = (R % 2 == 1) ? P.one : F(-P.one);  // (-1)^(R+1)
    tail = W.power(pi, R) * (sgn * P.L);
  } else if (P.kase == 2) {
    auto y = W.y();
    lead = W.power(pi, r) - W.power(y, r);
    rep.auxiliary = W.power(pi - y, r) == lead;
    long R = P.r_an;
    F sgn = (R % 2 == 1) ? P.one : F(-P.one);
    tail = (W.power(pi, R) - W.power(y, R)) * (sgn * P.L);
  } else {
    auto y = W.y();
    lead = W.power(y, r);
    // y^t = W pi^t with W = w pi^(s-t)
    rep.auxiliary = W.power(y, P.t) == W.power(pi, P.s) * P.W;
    F sgn = (P.t % 2 == 1) ? P.one : F(-P.one);         // (-1)^(t+1)
    F sst = ((P.s - P.t) % 2 == 0) ? P.one : F(-P.one);  // (-1)^(s-t)
    F lprime = sst * P.L / P.W;
    tail = W.power(y, P.t) * (sgn * lprime);
  }
  auto expansion = lead * det_l + W.eps_product() * det_o;
  auto final_form = lead * det_l + tail * det_o;
  rep.expansion = D == expansion;
  rep.final_form = D == final_form;
  return rep;
}

template WAlgebra<Rational>::Element regulator_determinant(const WAlgebra<Rational>&, const Matrix<Rational>&,
                                                            const Matrix<Rational>&);
template WAlgebra<RationalFunction>::Element regulator_determinant(const WAlgebra<RationalFunction>&,
                                                                    const Matrix<RationalFunction>&,
                                                                    const Matrix<RationalFunction>&);
template WAlgebra<PadicNumber>::Element regulator_determinant(const WAlgebra<PadicNumber>&,
                                                               const Matrix<PadicNumber>&,
                                                               const Matrix<PadicNumber>&);
template DetIdentityReport<Rational> check_det_identity(const WAlgebra<Rational>&, const Matrix<Rational>&,
                                                        const Matrix<Rational>&);
template DetIdentityReport<RationalFunction> check_det_identity(const WAlgebra<RationalFunction>&,
                                                                const Matrix<RationalFunction>&,
                                                                const Matrix<RationalFunction>&);
template DetIdentityReport<PadicNumber> check_det_identity(const WAlgebra<PadicNumber>&,
                                                           const Matrix<PadicNumber>&,
                                                           const Matrix<PadicNumber>&);

// ---------------------------------------------------------------------------

namespace {

std::vector<PadicNumber> pi_coefficients(const LambdaElement& eps) {
  const long p = eps.prime();
  long prec = 1;
  for (const auto& c : eps.coefficients())
    if (!c.is_exact_zero()) prec = std::max(prec, c.precision());
  PadicNumber lu = log_u(p, prec + eps.truncation());
  std::vector<PadicNumber> a;
  PadicNumber scale = PadicNumber::one(p, prec + eps.truncation());
  for (long i = 0; i <= eps.truncation(); ++i) {
    a.push_back(eps.coeff(i) * scale);
    scale *= lu;
  }
  return a;
}

void require_y(const PadicW& W) {
  if (W.params().kase == 1) throw DomainError("epsilon_y needs an algebra with y (cases 2 and 3)");
}

}  // namespace

PadicW::Element epsilon_image(const LambdaElement& eps, const PadicW& W) {
  auto a = pi_coefficients(eps);
  auto out = W.zero();
  auto pw = W.one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (pw.is_zero()) break;
    out = out + pw * a[i];
    pw = pw * W.pi();
  }
  return out;
}

namespace {

// g = (eps - 1) / pi = pi^(n-1) h' with h' from pi_normalize
PadicW::Element g_of(const LambdaElement& eps, const PadicW& W) {
  LambdaElement h = eps;
  h.coeff(0) = h.coeff(0) - PadicNumber::one(eps.prime(), h.coeff(0).precision());
  bool vanishes = true;
  for (const auto& c : h.coefficients()) vanishes = vanishes && c.is_zero();
  if (vanishes) return W.zero();
  auto pn = pi_normalize(h);
  if (pn.order < 1) throw DomainError("epsilon(x) - 1 is not divisible by pi");
  return W.power(W.pi(), pn.order - 1) * epsilon_image(pn.unit_part, W);
}

}  // namespace

PadicW::Element epsilon_y(const LambdaElement& eps, const PadicW& W) {
  require_y(W);
  return W.one() + g_of(eps, W) * W.y();
}

PadicW::Element epsilon_pi_minus_y(const LambdaElement& eps, const PadicW& W) {
  require_y(W);
  return W.one() + g_of(eps, W) * (W.pi() - W.y());
}

PadicW::Element epsilon_y_series(const LambdaElement& eps, const PadicW& W) {
  require_y(W);
  auto a = pi_coefficients(eps);
  auto out = W.zero();
  auto pw = W.one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (pw.is_zero()) break;
    out = out + pw * a[i];
    pw = pw * W.y();
  }
  return out;
}

}  // namespace gstark
