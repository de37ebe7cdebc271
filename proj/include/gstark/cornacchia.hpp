#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gstark/padic.hpp"

namespace gstark {

// All x mod m with x^2 == a (mod m), sorted ascending.  m is factored by trial
// division; prime-power components are lifted from roots mod q.
std::vector<Integer> sqrt_mod(const Integer& a, const Integer& m);

// Primitive solution of x^2 + D y^2 = 4m with x, y > 0, or nothing.
// D must be congruent to 0 or 3 mod 4.  Roots x0 of x0^2 == -D (mod 4m) with
// 0 <= x0 <= 2m are tried in increasing order; the first that yields a
// solution wins.
std::optional<std::pair<Integer, Integer>> cornacchia(const Integer& D, const Integer& m);

}  // namespace gstark
