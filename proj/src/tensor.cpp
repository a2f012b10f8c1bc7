#include "metric_ripple/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "metric_ripple/error.hpp"

namespace metric_ripple {

SymTensor3::SymTensor3(const Matrix& m) : m_(m) {
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k)
      require(m[j][k] == m[k][j], "SymTensor3: matrix is not symmetric");
}

SymTensor3 SymTensor3::diagonal(Complex a11, Complex a22, Complex a33) {
  SymTensor3 t;
  t.m_[0][0] = a11;
  t.m_[1][1] = a22;
  t.m_[2][2] = a33;
  return t;
}

void SymTensor3::set(int j, int k, Complex value) {
  m_[j][k] = value;
  m_[k][j] = value;
}

double SymTensor3::max_abs() const {
  double out = 0.0;
  for (const auto& row : m_)
    for (const auto& v : row) out = std::max(out, std::abs(v));
  return out;
}

bool SymTensor3::is_real() const {
  for (const auto& row : m_)
    for (const auto& v : row)
      if (v.imag() != 0.0) return false;
  return true;
}

SymTensor3 SymTensor3::real_part() const {
  SymTensor3 out;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) out.m_[j][k] = m_[j][k].real();
  return out;
}

SymTensor3& SymTensor3::operator+=(const SymTensor3& other) {
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m_[j][k] += other.m_[j][k];
  return *this;
}

SymTensor3& SymTensor3::operator-=(const SymTensor3& other) {
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m_[j][k] -= other.m_[j][k];
  return *this;
}

SymTensor3& SymTensor3::operator*=(Complex s) {
  for (auto& row : m_)
    for (auto& v : row) v *= s;
  return *this;
}

double max_abs_diff(const SymTensor3& a, const SymTensor3& b) {
  double out = 0.0;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) out = std::max(out, std::abs(a(j, k) - b(j, k)));
  return out;
}

Vec3 apply_real(const SymTensor3& a, const Vec3& v) {
  Vec3 out{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) out[j] += a(j, k).real() * v[k];
  return out;
}

Metric4 Metric4::minkowski() {
  Metric4 m;
  m.g[0][0] = -1.0;
  m.g[1][1] = 1.0;
  m.g[2][2] = 1.0;
  m.g[3][3] = 1.0;
  return m;
}

}  // namespace metric_ripple
