#include "gstark/bernoulli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace gstark {

namespace {

constexpr int kCacheVersion = 1;

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Integer binom(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

BernoulliCache::BernoulliCache() { entries_.push_back(Rational(1)); }

BernoulliCache& BernoulliCache::shared() {
  static BernoulliCache cache;
  return cache;
}

void BernoulliCache::extend_to(long n) {
  std::unique_lock lock(mu_);
  while (static_cast<long>(entries_.size()) <= n) {
    long m = static_cast<long>(entries_.size());
    Rational s = 0;
    for (long j = 0; j < m; ++j) s += Rational(binom(m + 1, j)) * entries_[j];
    Rational b = -s / (m + 1);
    b.canonicalize();
    entries_.push_back(b);
    computed_.fetch_add(1);
  }
}

Rational BernoulliCache::get(long n) {
  if (n < 0) throw DomainError("Bernoulli index must be >= 0");
  {
    std::shared_lock lock(mu_);
    if (n < static_cast<long>(entries_.size())) return entries_[n];
  }
  extend_to(n);
  std::shared_lock lock(mu_);
  return entries_[n];
}

std::vector<Rational> BernoulliCache::table(long n) {
  get(n);
  std::shared_lock lock(mu_);
  return std::vector<Rational>(entries_.begin(), entries_.begin() + n + 1);
}

std::size_t BernoulliCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

void BernoulliCache::save(const std::filesystem::path& path) const {
  nlohmann::json entries = nlohmann::json::array();
  {
    std::shared_lock lock(mu_);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries.push_back({i, to_string(entries_[i])});
  }
  nlohmann::json doc;
  doc["version"] = kCacheVersion;
  doc["entries"] = entries;
  doc["checksum"] = fnv1a_hex(entries.dump());
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw CacheError("cannot write " + path.string());
  out << doc.dump() << "\n";
}

void BernoulliCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot read " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("malformed cache: ") + e.what());
  }
  if (!doc.is_object() || doc.value("version", -1) != kCacheVersion || !doc.contains("entries") ||
      !doc["entries"].is_array())
    throw CacheError("cache has wrong version or layout");
  if (doc.value("checksum", std::string()) != fnv1a_hex(doc["entries"].dump()))
    throw CacheError("cache checksum mismatch");
  std::vector<Rational> loaded;
  try {
    for (const auto& e : doc["entries"]) {
      if (!e.is_array() || e.size() != 2 || e[0].get<std::size_t>() != loaded.size())
        throw CacheError("cache entries out of order");
      loaded.push_back(parse_rational(e[1].get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("malformed cache entry: ") + e.what());
  } catch (const DomainError& e) {
    throw CacheError(std::string("malformed cache entry: ") + e.what());
  }
  if (loaded.empty() || loaded[0] != 1) throw CacheError("cache does not start with B_0 = 1");
  for (std::size_t m = 1; m < loaded.size(); ++m) {
    Rational s = 0;
    for (std::size_t j = 0; j <= m; ++j) s += Rational(binom(static_cast<long>(m) + 1, static_cast<long>(j))) * loaded[j];
    if (s != 0) throw CacheError("cache entry B_" + std::to_string(m) + " fails the recursion");
  }
  std::unique_lock lock(mu_);
  if (loaded.size() > entries_.size()) entries_ = std::move(loaded);
}

// ---------------------------------------------------------------------------

Rational gen_bernoulli(long n, const DirichletCharacter& chi, BernoulliCache& cache) {
  if (n < 1) throw DomainError("gen_bernoulli needs n >= 1");
  if (!chi.is_quadratic()) throw UnsupportedError("exact gen_bernoulli needs a quadratic character");
  if (chi.modulus() == 1) return cache.get(n);
  long f = chi.modulus();
  auto B = cache.table(n);
  Rational total = 0;
  for (long a = 1; a <= f; ++a) {
    int c = chi.value(a);
    if (c == 0) continue;
    Rational s = 0;
    Integer apow = 1;
    // i runs downward so a^(n-i) grows
    for (long i = n; i >= 0; --i) {
      if (B[i] != 0) {
        Rational fpow = (i >= 1) ? Rational(ipow(f, i - 1)) : Rational(1, f);
        s += Rational(binom(n, i)) * B[i] * Rational(apow) * fpow;
      }
      apow *= a;
    }
    total += c * s;
  }
  total.canonicalize();
  return total;
}

PadicNumber gen_bernoulli_padic(long n, const DirichletCharacter& chi, long p, long precision,
                                BernoulliCache& cache) {
  if (n < 1) throw DomainError("gen_bernoulli needs n >= 1");
  if (chi.is_quadratic()) return PadicNumber::from_rational(p, gen_bernoulli(n, chi, cache), precision);
  long f = chi.modulus();
  long vf = valuation(Integer(f), p);
  long work = precision + 2 * vf + 3;
  auto B = cache.table(n);
  // S_i = sum_a chi(a) a^(n-i)
  std::vector<PadicNumber> S(n + 1, PadicNumber::exact_zero(p));
  for (long a = 1; a <= f; ++a) {
    PadicNumber c = chi.value_padic(a, p, work);
    if (c.is_exact_zero()) continue;
    Integer apow = 1;
    for (long i = n; i >= 0; --i) {
      S[i] += c * apow;
      apow *= a;
    }
  }
  PadicNumber total = PadicNumber::exact_zero(p);
  for (long i = 0; i <= n; ++i) {
    if (B[i] == 0) continue;
    Rational coef = Rational(binom(n, i)) * B[i] * ((i >= 1) ? Rational(ipow(f, i - 1)) : Rational(1, f));
    coef.canonicalize();
    total += S[i] * PadicNumber::from_rational(p, coef, work + 2);
  }
  if (total.precision() < precision)
    throw PrecisionError("gen_bernoulli_padic lost too many digits");
  return total.with_precision(precision);
}

}  // namespace gstark
