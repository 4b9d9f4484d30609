#include "cnf/modpoly.hpp"

#include "cnf/error.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cnf {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DomainError("zero has no inverse modulo p");
  return powmod(a, p - 2, p);
}

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

ModPoly ModPoly::constant(std::uint64_t p, std::uint64_t c) { return ModPoly(p, {c}); }

ModPoly ModPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t deg) {
  std::vector<std::uint64_t> v(deg + 1, 0);
  v[deg] = c;
  return ModPoly(p, std::move(v));
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t ModPoly::lc() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(invmod(lc(), p_));
}

ModPoly ModPoly::scaled(std::uint64_t c) const {
  std::vector<std::uint64_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = mulmod(c_[i], c, p_);
  return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(p_, {});
  std::vector<std::uint64_t> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = mulmod(c_[i], i % p_, p_);
  return ModPoly(p_, std::move(v));
}

std::uint64_t ModPoly::eval(std::uint64_t at) const {
  std::uint64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (mulmod(r, at, p_) + *it) % p_;
  return r;
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
  if (p_ == 0) p_ = o.p_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
  trim();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
  if (p_ == 0) p_ = o.p_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  trim();
  return *this;
}

ModPoly ModPoly::operator-() const {
  std::vector<std::uint64_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = (p_ - c_[i]) % p_;
  return ModPoly(p_, std::move(v));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  const std::uint64_t p = a.p_ ? a.p_ : b.p_;
  if (a.is_zero() || b.is_zero()) return ModPoly(p, {});
  std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
      if (acc[i + j] >> 120) acc[i + j] %= p;
    }
  }
  std::vector<std::uint64_t> v(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<std::uint64_t>(acc[i] % p);
  return ModPoly(p, std::move(v));
}

bool operator<(const ModPoly& a, const ModPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string ModPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::uint64_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) {
      os << c;
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

ModDivResult divmod(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial mod p");
  const std::uint64_t p = b.modulus();
  if (a.degree() < b.degree()) return {ModPoly(p, {}), a};
  std::vector<std::uint64_t> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const std::uint64_t inv = invmod(b.lc(), p);
  std::vector<std::uint64_t> q(r.size() - db, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    std::uint64_t c = mulmod(r[i + db], inv, p);
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i + j] = (r[i + j] + p - mulmod(c, b.coeffs()[j], p)) % p;
  }
  r.resize(db);
  return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).rem; }
ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).quot; }

ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const ModPoly& a, const ModPoly& b) {
  const std::uint64_t p = a.modulus() ? a.modulus() : b.modulus();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(p, 1), s1(p, {});
  ModPoly t0(p, {}), t1 = ModPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  std::uint64_t inv = invmod(r0.lc(), p);
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

ModPoly powmod(const ModPoly& base, const Int& exp, const ModPoly& mod) {
  const std::uint64_t p = mod.modulus();
  ModPoly r = ModPoly::constant(p, 1) % mod;
  ModPoly b = base % mod;
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % mod;
    if (mpz_tstbit(exp.get_mpz_t(), i)) r = (r * b) % mod;
  }
  return r;
}

ModPoly pow(const ModPoly& base, unsigned exp) {
  ModPoly r = ModPoly::constant(base.modulus(), 1);
  ModPoly b = base;
  while (exp) {
    if (exp & 1U) r = r * b;
    exp >>= 1U;
    if (exp) b = b * b;
  }
  return r;
}

ModPoly reduce_mod(const IntPoly& a, std::uint64_t p) {
  std::vector<std::uint64_t> v(a.size());
  Int m(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = mod_floor(a.coeffs()[i], m).get_ui();
  return ModPoly(p, std::move(v));
}

IntPoly lift(const ModPoly& a) {
  std::vector<Int> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<unsigned long>(a.coeffs()[i]);
  return IntPoly(std::move(v));
}

namespace {

void require_squarefree(const ModPoly& a) {
  if (a.degree() <= 0) return;
  ModPoly g = gcd(a, a.derivative());
  if (g.degree() > 0) throw NotSquarefree("polynomial is not squarefree mod " + std::to_string(a.modulus()));
}

}  // namespace

std::vector<std::pair<int, ModPoly>> ddf(const ModPoly& a_in) {
  require_squarefree(a_in);
  const std::uint64_t p = a_in.modulus();
  std::vector<std::pair<int, ModPoly>> out;
  ModPoly a = a_in.monic();
  if (a.degree() <= 0) return out;
  const ModPoly x = ModPoly::monomial(p, 1, 1);
  ModPoly h = x;
  const Int pz(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= a.degree(); ++d) {
    h = powmod(h, pz, a);
    ModPoly g = gcd(a, h - x);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      a = a / g;
      h = h % a;
    }
  }
  if (a.degree() > 0) out.emplace_back(a.degree(), a);
  return out;
}

std::vector<std::pair<int, int>> ddf_degrees(const ModPoly& a) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [d, g] : ddf(a)) out.emplace_back(d, g.degree() / d);
  return out;
}

namespace {

void cz_split(const ModPoly& a, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (a.degree() == d) {
    out.push_back(a.monic());
    return;
  }
  const std::uint64_t p = a.modulus();
  const auto n = static_cast<std::size_t>(a.degree());
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  const Int qd = ipow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
  while (true) {
    std::vector<std::uint64_t> v(n);
    for (auto& c : v) c = dist(rng);
    ModPoly r(p, std::move(v));
    if (r.degree() <= 0) continue;
    ModPoly b;
    if (p == 2) {
      // trace map r + r^2 + ... + r^(2^(k-1)), k = d
      ModPoly t = r % a;
      b = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % a;
        b += t;
      }
    } else {
      Int e = (qd - 1) / 2;
      b = powmod(r, e, a) - ModPoly::constant(p, 1);
    }
    ModPoly g = gcd(a, b);
    if (g.degree() > 0 && g.degree() < a.degree()) {
      cz_split(g, d, rng, out);
      cz_split(a / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModPoly> edf(const ModPoly& a_in, int d) {
  ModPoly a = a_in.monic();
  const std::uint64_t p = a.modulus();
  std::vector<ModPoly> out;
  if (a.degree() <= 0) return out;
  if (a.degree() % d != 0) throw DomainError("degree is not a multiple of the split degree");
  if (a.degree() == d) return {a};
  const Int space = ipow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
  const std::size_t count = static_cast<std::size_t>(a.degree() / d);
  if (space <= 20000) {
    // Exhaust monic degree-d candidates; each degree-d divisor of a is irreducible.
    const std::uint64_t total = space.get_ui();
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = 1;
    for (std::uint64_t idx = 0; idx < total && out.size() < count; ++idx) {
      std::uint64_t t = idx;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      ModPoly cand(p, c);
      if ((a % cand).is_zero()) out.push_back(cand);
    }
  } else {
    std::mt19937_64 rng(kSplitSeed);
    cz_split(a, d, rng, out);
  }
  std::sort(out.begin(), out.end());
  if (out.size() != count) throw Error("equal-degree splitting lost factors");
  return out;
}

namespace {

// p-th root of a polynomial whose derivative vanishes (coefficients live at multiples of p).
ModPoly pth_root(const ModPoly& a) {
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) v.push_back(a.coeffs()[i]);
  return ModPoly(p, std::move(v));
}

void sqf_rec(const ModPoly& f, int mult, std::vector<std::pair<ModPoly, int>>& out) {
  const std::uint64_t p = f.modulus();
  if (f.degree() <= 0) return;
  ModPoly c = gcd(f, f.derivative());
  ModPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) sqf_rec(pth_root(c.monic()), mult * static_cast<int>(p), out);
}

}  // namespace

std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly& a) {
  std::vector<std::pair<ModPoly, int>> out;
  sqf_rec(a.monic(), 1, out);
  return out;
}

ModFactorization factor_mod_p(const ModPoly& a) {
  ModFactorization res;
  if (a.is_zero()) throw DomainError("cannot factor the zero polynomial");
  res.unit = a.lc();
  for (const auto& [sqf, mult] : squarefree_decomposition(a)) {
    for (const auto& [d, g] : ddf(sqf))
      for (auto& irr : edf(g, d)) res.factors.emplace_back(std::move(irr), mult);
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& l, const auto& r) { return l.first < r.first || (l.first == r.first && l.second < r.second); });
  return res;
}

bool is_irreducible(const ModPoly& a) {
  if (a.degree() <= 0) return false;
  if (gcd(a, a.derivative()).degree() > 0) return false;
  auto parts = ddf(a);
  return parts.size() == 1 && parts[0].first == a.degree();
}

}  // namespace cnf
