#include "cnf/bigint.hpp"

#include "cnf/error.hpp"

#include <limits>

namespace cnf {

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int ipow(long base, unsigned long exp) { return ipow(Int(base), exp); }

Int parse_int(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
  s = s.substr(start);
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw ParseError("malformed integer literal: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw ParseError("malformed integer literal: " + s);
  return Int(s, 10);
}

std::string to_dec(const Int& v) { return v.get_str(10); }

Int from_i64(std::int64_t v) {
  Int r;
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    r = static_cast<long>(v);
    return r;
  }
  r = Int(std::to_string(v), 10);
  return r;
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw DomainError("integer does not fit in 64 bits: " + to_dec(v));
  return static_cast<std::int64_t>(v.get_si());
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int mod_floor(const Int& v, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace cnf
