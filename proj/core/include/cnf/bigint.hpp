#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cnf {

using Int = mpz_class;

Int ipow(const Int& base, unsigned long exp);
Int ipow(long base, unsigned long exp);
Int parse_int(std::string_view text);
std::string to_dec(const Int& v);
Int from_i64(std::int64_t v);
std::int64_t to_i64(const Int& v);  // throws DomainError when out of range
Int factorial(unsigned long n);

// Nonnegative residue of v modulo m (m > 0).
Int mod_floor(const Int& v, const Int& m);

}  // namespace cnf
