#pragma once

#include <atomic>
#include <filesystem>
#include <shared_mutex>
#include <vector>

#include "gstark/dirichlet.hpp"

namespace gstark {

// Bernoulli numbers B_n with B_1 = -1/2, extended on demand by the recursion
// sum_{j<=n} binom(n+1, j) B_j = 0.  Safe for concurrent readers.
class BernoulliCache {
 public:
  BernoulliCache();
  static BernoulliCache& shared();

  Rational get(long n);
  std::vector<Rational> table(long n);

  // JSON {version, entries: [[n, "num/den"], ...], checksum}.
  void save(const std::filesystem::path& path) const;
  // Throws CacheError on a malformed file, checksum mismatch or an entry that
  // fails the recursion.
  void load(const std::filesystem::path& path);

  std::size_t size() const;
  long computed_count() const { return computed_.load(); }

 private:
  void extend_to(long n);

  mutable std::shared_mutex mu_;
  std::vector<Rational> entries_;
  std::atomic<long> computed_{0};
};

// B_{n, chi} = sum_{a=1}^{f} chi(a) sum_i binom(n, i) B_i a^(n-i) f^(i-1), where f
// is the modulus of chi.  For the trivial character of modulus 1 and n = 1
// this returns B_1 = -1/2.
Rational gen_bernoulli(long n, const DirichletCharacter& chi,
                       BernoulliCache& cache = BernoulliCache::shared());
PadicNumber gen_bernoulli_padic(long n, const DirichletCharacter& chi, long p, long precision,
                                BernoulliCache& cache = BernoulliCache::shared());

}  // namespace gstark
