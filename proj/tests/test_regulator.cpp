#include <random>

#include "doctest.h"
#include "gstark/dirichlet.hpp"
#include "gstark/lfunction.hpp"
#include "gstark/regulator.hpp"

using namespace gstark;

namespace {

// all (x, y) with x, y > 0 and x^2 + |d| y^2 = 4 m
std::vector<std::pair<long, long>> norm_solutions(long d, long m) {
  std::vector<std::pair<long, long>> out;
  for (long y = 1; -d * y * y <= 4 * m; ++y)
    for (long x = 1; x * x - d * y * y <= 4 * m; ++x)
      if (x * x - d * y * y == 4 * m) out.push_back({x, y});
  return out;
}

long direct_valuation(const Integer& a, long p) {
  long v = 0;
  Integer t = a;
  while (t != 0 && t % p == 0) {
    t /= p;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("find_p_unit examples") {
  auto c = find_p_unit(-4, 5, 12);
  CHECK(c.h == 1);
  CHECK(c.x == 4);
  CHECK(c.y == 1);
  auto e = find_p_unit(-3, 7, 12);
  CHECK(e.h == 1);
  CHECK(e.x == 5);
  CHECK(e.y == 1);
  CHECK_THROWS_AS(find_p_unit(-4, 3, 12), DomainError);
  CHECK_THROWS_AS(find_p_unit(-8, 7, 12), DomainError);
  CHECK_THROWS_AS(find_p_unit(-4, 2, 12), DomainError);
  CHECK_THROWS_AS(find_p_unit(-12, 7, 12), DomainError);
  // Q(sqrt(-23)) has class number 3
  CHECK_THROWS_AS(find_p_unit(-23, 13, 12, 2), SearchBoundError);
  CHECK(find_p_unit(-23, 13, 12).h == 3);
}

TEST_CASE("norm identity, minimal h and primitivity against exhaustive search") {
  for (long d : {-3L, -4L, -7L, -8L, -11L, -15L, -20L, -23L, -24L})
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
      if (kronecker(d, p) != 1) continue;
      auto c = find_p_unit(d, p, 10);
      Integer lhs = c.x * c.x - Integer(d) * c.y * c.y;
      CHECK(lhs == 4 * ipow(p, c.h));
      long hmin = 0;
      for (long h = 1; h <= 6 && hmin == 0; ++h)
        for (auto [x, y] : norm_solutions(d, ipow(p, h).get_si()))
          if (x % p != 0 || y % p != 0) {
            hmin = h;
            break;
          }
      CHECK_MESSAGE(c.h == hmin, "d=", d, " p=", p);
      CHECK(std::abs(c.o) == c.h);
    }
}

TEST_CASE("measure: valuations against direct integer computation") {
  // d = -4, p = 5: w = sqrt(-4) = 2 iota(i)
  auto w = hensel_sqrt(-4, 5, 14);
  // iota(pi) = (x + y w)/2 with (x, y) = (4, 1); its valuation is visible on an integer lift
  Integer lift = (4 + w.residue()) % ipow(5, 14);
  auto m = measure(-4, 5, 4, 1, w, 12);
  long vplus = direct_valuation(lift, 5);
  long vminus = direct_valuation((4 - w.residue() + ipow(5, 14)) % ipow(5, 14), 5);
  CHECK(m.o == vplus - vminus);
  CHECK(std::abs(m.o) == 1);
}

TEST_CASE("root swap and associates") {
  for (long d : {-3L, -4L, -7L, -8L, -20L})
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
      if (kronecker(d, p) != 1) continue;
      auto c = find_p_unit(d, p, 12);
      auto s = swap_root(c);
      CHECK(s.o == -c.o);
      CHECK(discrepancy_valuation(s.ell, -c.ell) >= 12);
      CHECK(discrepancy_valuation(gross_regulator_rank1(s), gross_regulator_rank1(c)) >= 11);
      CHECK(c.to_json() == find_p_unit(d, p, 12).to_json());
    }
  // i * pi for d = -4 and the sixth roots of unity for d = -3
  auto c = find_p_unit(-4, 13, 12);
  auto base = gross_regulator_rank1(c);
  Integer x = -2 * c.y, y = c.x / 2;
  auto m = measure(-4, 13, x, y, c.w, 12);
  CHECK(m.o == c.o);
  CHECK(discrepancy_valuation(-m.ell / Integer(m.o), base) >= 11);
  auto e = find_p_unit(-3, 7, 12);
  // zeta = (1 + sqrt(-3))/2; zeta * (x + y s)/2 = ((x - 3y) + (x + y) s)/4
  Integer xz = (e.x - 3 * e.y) / 2, yz = (e.x + e.y) / 2;
  auto mz = measure(-3, 7, xz, yz, e.w, 12);
  CHECK(mz.o == e.o);
  CHECK(discrepancy_valuation(mz.ell, e.ell) >= 12);
}

TEST_CASE("h-scaling: pi^2 has o = 2 h") {
  auto c = find_p_unit(-7, 11, 12);
  // pi^2 = ((x^2 + d y^2)/2 + x y sqrt(d)) / 2
  Integer x2 = (c.x * c.x + c.d * c.y * c.y) / 2, y2 = c.x * c.y;
  auto m = measure(c.d, c.p, x2, y2, c.w, 12);
  CHECK(m.o == 2 * c.o);
  CHECK(discrepancy_valuation(m.ell, c.ell * 2L) >= 12);
}

TEST_CASE("general regulator") {
  const long p = 7, N = 10;
  std::mt19937 g(3);
  std::uniform_int_distribution<int> d(-5, 5);
  auto rnd = [&]() { return PadicNumber::from_integer(p, d(g) * 7 + 1 + d(g), N); };
  Matrix<Integer> o1{{1}};
  auto c = PadicNumber::from_integer(p, 42, N);
  CHECK(discrepancy_valuation(gross_regulator_general(o1, {{c}}), -c) >= N);
  CHECK_THROWS_AS(gross_regulator_general({{1, 2}, {2, 4}}, {{c, c}, {c, c}}), DomainError);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix<Integer> o(2, std::vector<Integer>(2));
    Matrix<PadicNumber> l(2);
    do {
      for (auto& row : o)
        for (auto& x : row) x = d(g);
    } while (o[0][0] * o[1][1] - o[0][1] * o[1][0] == 0);
    for (auto& row : l) row = {rnd(), rnd()};
    auto base = gross_regulator_general(o, l);
    // rows scaled by a common nonzero integer
    Matrix<Integer> o2 = o;
    Matrix<PadicNumber> l2 = l;
    Integer s = d(g) == 0 ? 3 : 2;
    for (auto& x : o2[1]) x *= s;
    for (auto& x : l2[1]) x *= s;
    CHECK(discrepancy_valuation(gross_regulator_general(o2, l2), base) >= N - 2);
    // right multiplication of both by an invertible integer matrix
    Matrix<Integer> A(2, std::vector<Integer>(2));
    do {
      for (auto& row : A)
        for (auto& x : row) x = d(g);
    } while (A[0][0] * A[1][1] - A[0][1] * A[1][0] == 0);
    Matrix<Integer> oA(2, std::vector<Integer>(2, 0));
    Matrix<PadicNumber> lA(2, std::vector<PadicNumber>(2, PadicNumber::zero(p, N)));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          oA[i][j] += o[i][k] * A[k][j];
          lA[i][j] = lA[i][j] + l[i][k] * A[k][j];
        }
    CHECK(discrepancy_valuation(gross_regulator_general(oA, lA), base) >= N - 3);
  }
  // 1x1 consistency with the rank-1 route
  auto cert = find_p_unit(-4, 5, 12);
  CHECK(discrepancy_valuation(gross_regulator_general({{cert.o}}, {{cert.ell}}), gross_regulator_rank1(cert)) >= 12);
}

TEST_CASE("regulator equals the analytic invariant") {
  const long N = 12;
  long checked = 0;
  for (auto [p, d] : std::vector<std::pair<long, long>>{{5, -4}, {7, -3}, {13, -4}, {3, -8}, {5, -11}, {3, -11}, {7, -19}, {11, -7}}) {
    if (kronecker(d, p) != 1) continue;
    auto inst = LSeriesInstance::make(DirichletCharacter::kronecker(d), p, N);
    auto rep = analytic_invariant(inst);
    auto reg = gross_regulator_rank1(find_p_unit(d, p, N));
    long disc = discrepancy_valuation(rep.analytic_invariant, reg);
    CHECK_MESSAGE(disc >= N - 4, "p=", p, " d=", d, " L_an=", rep.analytic_invariant.to_string(), " R_p=", reg.to_string());
    ++checked;
  }
  CHECK(checked >= 5);
}
