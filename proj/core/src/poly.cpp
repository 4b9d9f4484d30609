#include "cnf/poly.hpp"

#include "cnf/error.hpp"
#include "cnf/modpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cnf {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t deg) {
  std::vector<Int> v(deg + 1);
  v[deg] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(Int(1), 1); }

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Int IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

const Int& IntPoly::lc() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void IntPoly::set_coeff(std::size_t i, const Int& c) {
  if (i >= coeffs_.size()) coeffs_.resize(i + 1);
  coeffs_[i] = c;
  trim();
}

Int IntPoly::eval(const Int& at) const {
  Int r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r *= at;
    r += *it;
  }
  return r;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  IntPoly r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r *= inner;
    r += constant(*it);
  }
  return r;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int c = content();
  if (sgn(lc()) < 0) c = -c;
  return exact_div(*this, c);
}

IntPoly IntPoly::shift(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Int> v(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Int& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPoly pow(const IntPoly& base, unsigned exp) {
  IntPoly r = IntPoly::constant(Int(1));
  IntPoly b = base;
  while (exp) {
    if (exp & 1U) r *= b;
    exp >>= 1U;
    if (exp) b *= b;
  }
  return r;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree())
    throw NotDivisible("degree of divisor exceeds dividend", static_cast<std::size_t>(a.degree()));
  std::vector<Int> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const Int& lb = b.lc();
  std::vector<Int> q(rem.size() - db);
  for (std::size_t i = q.size(); i-- > 0;) {
    Int& top = rem[i + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw NotDivisible("leading coefficient does not divide at position " + std::to_string(i + db), i + db);
    mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  for (std::size_t i = db; i-- > 0;)
    if (sgn(rem[i]) != 0) throw NotDivisible("nonzero remainder at position " + std::to_string(i), i);
  return IntPoly(std::move(q));
}

IntPoly exact_div(const IntPoly& a, const Int& c) {
  if (sgn(c) == 0) throw DomainError("division by zero");
  std::vector<Int> v = a.coeffs();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!mpz_divisible_p(v[i].get_mpz_t(), c.get_mpz_t()))
      throw NotDivisible("scalar does not divide coefficient " + std::to_string(i), i);
    mpz_divexact(v[i].get_mpz_t(), v[i].get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Int> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const Int& lb = b.lc();
  for (std::size_t top = r.size(); top-- > db;) {
    Int c = r[top];
    for (auto& x : r) x *= lb;
    if (sgn(c) != 0) {
      const std::size_t off = top - db;
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[off + j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    r.pop_back();
  }
  return IntPoly(std::move(r));
}

IntPoly gcd_int(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part() * abs(b.content());
  if (b.is_zero()) return a.primitive_part() * abs(a.content());
  Int c;
  Int ca = a.content();
  Int cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_rem(u, v);
    u = std::move(v);
    v = r.is_zero() ? IntPoly{} : r.primitive_part();
  }
  return u.primitive_part() * c;
}

Int resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return Int(0);
  IntPoly a = a_in;
  IntPoly b = b_in;
  int sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * ipow(b.lc(), static_cast<unsigned long>(a.degree()));

  Int ca = a.content();
  Int cb = b.content();
  a = exact_div(a, ca);
  b = exact_div(b, cb);
  Int t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
  Int g = 1;
  Int h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    IntPoly r = pseudo_rem(a, b);
    if (r.is_zero()) return Int(0);
    a = std::move(b);
    Int denom = g * ipow(h, static_cast<unsigned long>(delta));
    b = exact_div(r, denom);
    g = a.lc();
    // h <- g^delta / h^(delta-1)
    if (delta == 0) {
      // h^(1) * g^0 = h
    } else {
      Int num = ipow(g, static_cast<unsigned long>(delta));
      Int den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  const auto da = static_cast<unsigned long>(a.degree());
  Int num = ipow(b.lc(), da);
  if (da >= 1) {
    Int den = ipow(h, da - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    h = num;
  }
  return sign * t * h;
}

Int discriminant(const IntPoly& a) {
  if (a.degree() < 1) throw DomainError("discriminant needs positive degree");
  const long n = a.degree();
  Int r = resultant(a, a.derivative());
  Int q;
  mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), a.lc().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) q = -q;
  return q;
}

bool is_squarefree(const IntPoly& a) {
  if (a.degree() <= 0) return true;
  IntPoly da = a.derivative();
  static const std::uint64_t primes[] = {1000003ULL, 1000033ULL, 1000037ULL, 1000039ULL, 1000081ULL};
  for (std::uint64_t q : primes) {
    if (mpz_divisible_ui_p(a.lc().get_mpz_t(), q)) continue;
    ModPoly g = gcd(reduce_mod(a, q), reduce_mod(da, q));
    if (g.degree() == 0) return true;
  }
  return gcd_int(a, da).degree() == 0;
}

IntPoly reduce_coeffs(const IntPoly& a, const Int& m) {
  std::vector<Int> v = a.coeffs();
  for (auto& c : v) c = mod_floor(c, m);
  return IntPoly(std::move(v));
}

}  // namespace cnf
