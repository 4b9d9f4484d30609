#include "cnf/quadforms.hpp"

#include "cnf/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

namespace cnf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1U) r = mul64(r, a, m);
    a = mul64(a, a, m);
    e >>= 1U;
  }
  return r;
}

u64 isqrt64(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(n ^ 0x9e3779b97f4a7c15ULL);
  while (true) {
    u64 c = rng() % (n - 1) + 1;
    u64 x = rng() % n;
    u64 y = x;
    u64 d = 1;
    while (d == 1) {
      x = (mul64(x, x, n) + c) % n;
      y = (mul64(y, y, n) + c) % n;
      y = (mul64(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::map<u64, int> out;
  for (u64 p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, out);
  return {out.begin(), out.end()};
}

bool is_valid_discriminant(std::int64_t d) { return d > 0 && (d % 4 == 0 || d % 4 == 3); }

bool is_fundamental(std::int64_t dK) {
  if (dK >= 0) return false;
  const u64 a = static_cast<u64>(-dK);
  auto squarefree = [](u64 m) {
    for (const auto& [p, e] : factorize(m))
      if (e > 1) return false;
    return true;
  };
  if (a % 4 == 3) return squarefree(a);  // dK = 1 mod 4
  if (a % 4 != 0) return false;
  const u64 m = a / 4;  // dK = -4m', m' = -m; need m' = 2 or 3 mod 4
  if (m % 4 != 1 && m % 4 != 2) return false;
  return squarefree(m);
}

Discriminant decompose(std::int64_t d) {
  if (!is_valid_discriminant(d)) throw DomainError("-" + std::to_string(d) + " is not a discriminant (must be 0 or 1 mod 4)");
  u64 s = 1, t = 1;
  for (const auto& [p, e] : factorize(static_cast<u64>(d))) {
    for (int i = 0; i < e / 2; ++i) t *= p;
    if (e % 2) s *= p;
  }
  Discriminant r;
  r.d = d;
  if (s % 4 == 3) {
    r.dK = -static_cast<std::int64_t>(s);
    r.f = static_cast<std::int64_t>(t);
  } else {
    r.dK = -4 * static_cast<std::int64_t>(s);
    r.f = static_cast<std::int64_t>(t / 2);
  }
  return r;
}

int kronecker(const Int& a, const Int& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

int kronecker(std::int64_t a, std::int64_t n) { return kronecker(from_i64(a), from_i64(n)); }

std::vector<QuadForm> reduced_forms(std::int64_t d) {
  if (!is_valid_discriminant(d)) throw DomainError("-" + std::to_string(d) + " is not a discriminant");
  std::vector<QuadForm> out;
  const u64 bmax = isqrt64(static_cast<u64>(d) / 3);
  for (std::int64_t b = d % 2; b <= static_cast<std::int64_t>(bmax); b += 2) {
    const std::int64_t m = (b * b + d) / 4;
    for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= m; ++a) {
      if (m % a != 0) continue;
      const std::int64_t c = m / a;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.push_back({a, b, c});
      if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t class_number(std::int64_t d) { return static_cast<std::int64_t>(reduced_forms(d).size()); }

ClassNumberCache::ClassNumberCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("cache line " + std::to_string(lineno) + ": expected d,h");
    const std::int64_t d = to_i64(parse_int(line.substr(0, comma)));
    const std::int64_t h = to_i64(parse_int(line.substr(comma + 1)));
    if (!table_.emplace(d, h).second) throw ParseError("cache line " + std::to_string(lineno) + ": duplicate d=" + std::to_string(d));
  }
}

std::int64_t ClassNumberCache::class_number(std::int64_t d) {
  {
    std::shared_lock lock(mu_);
    auto it = table_.find(d);
    if (it != table_.end()) return it->second;
  }
  const std::int64_t h = cnf::class_number(d);
  std::unique_lock lock(mu_);
  if (table_.emplace(d, h).second && !path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    out << d << "," << h << "\n";
  }
  return h;
}

std::size_t ClassNumberCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

std::filesystem::path ClassNumberCache::default_path() {
  if (const char* env = std::getenv("CNF_CACHE"); env && *env) return env;
  return "cnf_classnum.cache";
}

}  // namespace cnf
