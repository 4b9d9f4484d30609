#pragma once

#include "cnf/bigint.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace cnf {

// Order discriminant -d = dK * f^2.
struct Discriminant {
  std::int64_t d = 0;
  std::int64_t dK = 0;  // negative fundamental discriminant
  std::int64_t f = 0;   // conductor
  friend bool operator==(const Discriminant&, const Discriminant&) = default;
};

struct QuadForm {
  std::int64_t a = 0, b = 0, c = 0;
  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

// -d = 0 or 1 (mod 4) with d > 0.
bool is_valid_discriminant(std::int64_t d);
// dK < 0 fundamental.
bool is_fundamental(std::int64_t dK);

// Prime factorization with multiplicities, ascending; trial division to 10^6, then Pollard rho.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
bool is_prime_u64(std::uint64_t n);

Discriminant decompose(std::int64_t d);

int kronecker(const Int& a, const Int& n);
int kronecker(std::int64_t a, std::int64_t n);

std::vector<QuadForm> reduced_forms(std::int64_t d);
std::int64_t class_number(std::int64_t d);

// Persistent "d,h" cache, loaded at construction and appended on each miss.
class ClassNumberCache {
 public:
  ClassNumberCache() = default;  // in-memory only
  explicit ClassNumberCache(std::filesystem::path path);

  std::int64_t class_number(std::int64_t d);
  std::size_t size() const;
  const std::filesystem::path& path() const { return path_; }

  // Default location: $CNF_CACHE if set, otherwise ./cnf_classnum.cache
  static std::filesystem::path default_path();

 private:
  std::filesystem::path path_;
  mutable std::shared_mutex mu_;
  std::map<std::int64_t, std::int64_t> table_;
};

}  // namespace cnf
