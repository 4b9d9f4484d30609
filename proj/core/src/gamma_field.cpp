#include "cnf/gamma_field.hpp"

#include "cnf/error.hpp"

#include <sstream>

namespace cnf {

GammaField::GammaField(mpq_class c0, mpq_class c1, mpq_class c2) : c_{std::move(c0), std::move(c1), std::move(c2)} {}

GammaField GammaField::gen() { return GammaField(0, 1, 0); }

bool GammaField::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

GammaField& GammaField::operator+=(const GammaField& o) {
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

GammaField& GammaField::operator-=(const GammaField& o) {
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

GammaField& GammaField::operator*=(const GammaField& o) {
  std::array<mpq_class, 5> p{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i + j] += c_[i] * o.c_[j];
  // t^4 = 6t^3 - 3t^2 - t, t^3 = 6t^2 - 3t - 1
  p[3] += 6 * p[4];
  p[2] -= 3 * p[4];
  p[1] -= p[4];
  p[2] += 6 * p[3];
  p[1] -= 3 * p[3];
  p[0] -= p[3];
  c_ = {p[0], p[1], p[2]};
  return *this;
}

GammaField GammaField::operator-() const { return GammaField(-c_[0], -c_[1], -c_[2]); }

GammaField GammaField::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(gamma)");
  // Columns of the multiplication-by-this matrix are this*1, this*t, this*t^2; solve M v = e0.
  std::array<std::array<mpq_class, 4>, 3> m{};
  GammaField basis[3] = {GammaField(1), gen(), gen() * gen()};
  for (int j = 0; j < 3; ++j) {
    GammaField col = *this * basis[j];
    for (int i = 0; i < 3; ++i) m[i][j] = col.c_[i];
  }
  m[0][3] = 1;
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      mpq_class f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return GammaField(m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]);
}

std::string GammaField::to_string() const {
  std::ostringstream os;
  os << c_[0] << " + (" << c_[1] << ")*g + (" << c_[2] << ")*g^2";
  return os.str();
}

GammaField pow(const GammaField& base, unsigned exp) {
  GammaField r(1);
  GammaField b = base;
  while (exp) {
    if (exp & 1U) r *= b;
    exp >>= 1U;
    if (exp) b *= b;
  }
  return r;
}

}  // namespace cnf
