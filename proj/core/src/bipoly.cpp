#include "cnf/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace cnf {

BiPoly::BiPoly(std::vector<IntPoly> rows) : rows_(std::move(rows)) { trim(); }

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPoly BiPoly::from_terms(std::initializer_list<std::tuple<long, int, int>> terms) {
  std::vector<IntPoly> rows;
  for (const auto& [c, i, j] : terms) {
    const auto ui = static_cast<std::size_t>(i);
    if (rows.size() <= ui) rows.resize(ui + 1);
    IntPoly& r = rows[ui];
    r.set_coeff(static_cast<std::size_t>(j), r.coeff(static_cast<std::size_t>(j)) + c);
  }
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::in_first(const IntPoly& p) {
  std::vector<IntPoly> rows;
  rows.reserve(p.size());
  for (const auto& c : p.coeffs()) rows.push_back(IntPoly::constant(c));
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::in_second(const IntPoly& p) { return BiPoly(std::vector<IntPoly>{p}); }

BiPoly BiPoly::constant(const Int& c) { return in_second(IntPoly::constant(c)); }

int BiPoly::deg_second() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

Int BiPoly::coeff(std::size_t i, std::size_t j) const { return i < rows_.size() ? rows_[i].coeff(j) : Int(0); }

IntPoly BiPoly::coeff_of_first(std::size_t i) const { return i < rows_.size() ? rows_[i] : IntPoly{}; }

IntPoly BiPoly::coeff_of_second(std::size_t j) const {
  std::vector<Int> v(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) v[i] = rows_[i].coeff(j);
  return IntPoly(std::move(v));
}

IntPoly BiPoly::eval_first(const Int& u) const {
  IntPoly r;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    r *= u;
    r += *it;
  }
  return r;
}

IntPoly BiPoly::eval_second(const Int& v) const {
  std::vector<Int> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = rows_[i].eval(v);
  return IntPoly(std::move(out));
}

IntPoly BiPoly::diagonal() const {
  std::vector<Int> out(rows_.size() + static_cast<std::size_t>(std::max(deg_second(), 0)));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) out[i + j] += rows_[i].coeffs()[j];
  return IntPoly(std::move(out));
}

BiPoly BiPoly::swapped() const {
  const int dv = deg_second();
  std::vector<IntPoly> rows;
  for (int j = 0; j <= dv; ++j) rows.push_back(coeff_of_second(static_cast<std::size_t>(j)));
  return BiPoly(std::move(rows));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
  trim();
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& row : r.rows_) row = -row;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPoly> rows(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i)
    for (std::size_t j = 0; j < b.rows_.size(); ++j) rows[i + j] += a.rows_[i] * b.rows_[j];
  return BiPoly(std::move(rows));
}

BiPoly operator*(BiPoly a, const Int& c) {
  for (auto& r : a.rows_) r *= c;
  a.trim();
  return a;
}

std::string BiPoly::to_string(const std::string& u, const std::string& v) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = rows_.size(); i-- > 0;) {
    if (rows_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << rows_[i].to_string(v) << ")";
    if (i >= 1) os << "*" << u;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

BiPoly pow(const BiPoly& base, unsigned exp) {
  BiPoly r = BiPoly::constant(Int(1));
  BiPoly b = base;
  while (exp) {
    if (exp & 1U) r = r * b;
    exp >>= 1U;
    if (exp) b = b * b;
  }
  return r;
}

}  // namespace cnf
