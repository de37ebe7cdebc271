#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gstark/lambda_ring.hpp"
#include "gstark/polynomial.hpp"

namespace gstark {

inline std::string to_string(const PadicNumber& x) { return x.to_string(); }
inline std::string to_string(const RationalFunction& x) { return x.to_string(); }

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Leibniz expansion; fine for the small ranks used here.
template <class T>
T leibniz_det(const Matrix<T>& m, const T& zero) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n == 0) throw DomainError("determinant of an empty matrix needs a unit");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    T term = m[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i) term = term * m[i][perm[i]];
    if (sign < 0)
      total = total - term;
    else
      total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// pi^a y^b, or a squarefree product of epsilons (mixed products vanish).
struct WMonomial {
  int pi = 0;
  int y = 0;
  unsigned eps = 0;

  int degree() const { return pi + y + __builtin_popcount(eps); }
  std::string label() const;
  auto key() const { return std::make_tuple(pi, y, eps); }
  bool operator==(const WMonomial& o) const { return key() == o.key(); }
  bool operator<(const WMonomial& o) const { return key() < o.key(); }
};

// Parameters of the three constructions.
//   case 1: E[pi, eps] / (pi^(R+1), eps_i^2, eps_i pi, eps_1..eps_r + (-1)^R L pi^R)
//   case 2: adds y with y^(R+1), y(pi - y), pi^R W - y^R (W + 1), eps_i y, and
//           eps_1..eps_r + (-1)^R L (pi^R - y^R)
//   case 3: pi^(s+1), y^(t+1), y(pi - y), w pi^s - y^t, eps_i pi, eps_i y,
//           eps_1..eps_r + (-1)^s L pi^s
template <class F>
struct WParams {
  int kase = 1;
  long r = 1;
  long r_an = 1;
  long s = 0;
  long t = 0;
  F L;
  F W;  // case 2: the scalar W; case 3: the unit w with W = w pi^(s-t)
  F one;
};

// Finite-dimensional quotient of the monomial algebra by the defining
// relations.  The ideal is computed as an exact subspace; basis monomials are
// the non-pivot monomials when higher degree (then pi-containing, then
// eps-containing) monomials are eliminated first.
template <class F>
class WAlgebra {
 public:
  class Element {
   public:
    Element() = default;
    const std::vector<F>& coords() const { return c_; }
    const WAlgebra* algebra() const { return alg_; }
    bool is_zero() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const { return alg_->multiply(*this, o); }
    Element operator*(const F& s) const;
    bool operator==(const Element& o) const { return (*this - o).is_zero(); }
    std::string to_string() const;

   private:
    friend class WAlgebra;
    const WAlgebra* alg_ = nullptr;
    std::vector<F> c_;
  };

  explicit WAlgebra(WParams<F> params);
  WAlgebra(const WAlgebra&) = delete;
  WAlgebra& operator=(const WAlgebra&) = delete;

  const WParams<F>& params() const { return params_; }
  long dimension() const { return static_cast<long>(basis_.size()); }
  std::vector<WMonomial> basis() const;
  std::vector<std::string> basis_labels() const;
  // Products of more than this many generators vanish.
  long nilpotency_bound() const { return params_.kase == 3 ? params_.s : params_.r_an; }

  Element zero() const;
  Element one() const { return scalar(params_.one); }
  Element scalar(const F& c) const;
  Element pi() const { return monomial({1, 0, 0}); }
  Element y() const;
  Element eps(long i) const;
  Element eps_product() const;
  Element monomial(const WMonomial& m) const;
  Element multiply(const Element& a, const Element& b) const;
  Element power(const Element& a, long n) const;

  // Canonical representative of a modulo m^k.
  Element reduce_mod_max_power(const Element& a, long k) const;
  bool in_max_power(const Element& a, long k) const { return reduce_mod_max_power(a, k).is_zero(); }

  bool check_associative_commutative() const;
  bool check_nilpotent() const;

 private:
  using Sparse = std::vector<std::pair<long, F>>;
  bool mono_product(const WMonomial& a, const WMonomial& b, WMonomial& out) const;
  long ambient_index(const WMonomial& m) const;
  F fzero() const { return params_.one * 0L; }

  WParams<F> params_;
  long pi_cap_ = 0;
  long y_cap_ = 0;
  std::vector<WMonomial> ambient_;
  std::map<WMonomial, long> index_;
  std::vector<long> basis_;
  std::vector<Sparse> nf_;  // per ambient monomial, in basis coordinates
};

template <class F>
struct DetIdentityReport {
  bool auxiliary = true;  // (pi - y)^r = pi^r - y^r (case 2) or y^t = W pi^t (case 3)
  bool expansion = true;  // det = det(l) P + det(o) eps_1..eps_r
  bool final_form = true; // eps product replaced through the defining relation
  bool all() const { return auxiliary && expansion && final_form; }
};

// Checks the determinant identities for the matrix (l_ij X + o_ij eps_i) with
// X = pi, pi - y or y in cases 1, 2, 3.  Requires r x r matrices.
template <class F>
DetIdentityReport<F> check_det_identity(const WAlgebra<F>& W, const Matrix<F>& o, const Matrix<F>& l);

// det(l_ij X + o_ij eps_i) in W.
template <class F>
typename WAlgebra<F>::Element regulator_determinant(const WAlgebra<F>& W, const Matrix<F>& o, const Matrix<F>& l);

// Images in W of the Lambda-character epsilon(x): sum a_i pi^i with
// a_i = c_i (log u)^i, its y-variant 1 + g y with g = (eps - 1) / pi, and the
// pi - y variant.  Cases 2 and 3 only for the y-variants.
using PadicW = WAlgebra<PadicNumber>;
PadicW::Element epsilon_image(const LambdaElement& eps, const PadicW& W);
PadicW::Element epsilon_y(const LambdaElement& eps, const PadicW& W);
PadicW::Element epsilon_pi_minus_y(const LambdaElement& eps, const PadicW& W);
// sum a_i y^i, the series route for epsilon_y
PadicW::Element epsilon_y_series(const LambdaElement& eps, const PadicW& W);

extern template class WAlgebra<Rational>;
extern template class WAlgebra<RationalFunction>;
extern template class WAlgebra<PadicNumber>;

}  // namespace gstark
