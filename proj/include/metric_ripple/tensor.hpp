#pragma once

#include <array>
#include <complex>

namespace metric_ripple {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Symmetric 3x3 complex tensor (spatial metric perturbation components).
///
/// Storage is a full 3x3 matrix but every mutation writes both (j,k) and
/// (k,j), so entries[j][k] == entries[k][j] holds bit-for-bit.
class SymTensor3 {
 public:
  using Matrix = std::array<std::array<Complex, 3>, 3>;

  SymTensor3() = default;

  /// Throws Error if `m` is not exactly symmetric.
  explicit SymTensor3(const Matrix& m);

  static SymTensor3 diagonal(Complex a11, Complex a22, Complex a33);
  static SymTensor3 identity() { return diagonal(1.0, 1.0, 1.0); }

  Complex operator()(int j, int k) const { return m_[j][k]; }
  void set(int j, int k, Complex value);

  const Matrix& entries() const { return m_; }

  Complex trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }
  double max_abs() const;
  bool is_real() const;
  SymTensor3 real_part() const;

  SymTensor3& operator+=(const SymTensor3& other);
  SymTensor3& operator-=(const SymTensor3& other);
  SymTensor3& operator*=(Complex s);

  friend SymTensor3 operator+(SymTensor3 a, const SymTensor3& b) { return a += b; }
  friend SymTensor3 operator-(SymTensor3 a, const SymTensor3& b) { return a -= b; }
  friend SymTensor3 operator*(SymTensor3 a, Complex s) { return a *= s; }
  friend SymTensor3 operator*(Complex s, SymTensor3 a) { return a *= s; }
  friend bool operator==(const SymTensor3&, const SymTensor3&) = default;

 private:
  Matrix m_{};
};

/// Largest entrywise |a - b|.
double max_abs_diff(const SymTensor3& a, const SymTensor3& b);

/// Real part of A·v.
Vec3 apply_real(const SymTensor3& a, const Vec3& v);

/// 4x4 real symmetric spacetime metric, signature (-,+,+,+).
struct Metric4 {
  std::array<std::array<double, 4>, 4> g{};

  static Metric4 minkowski();
  double operator()(int mu, int nu) const { return g[mu][nu]; }
  friend bool operator==(const Metric4&, const Metric4&) = default;
};

}  // namespace metric_ripple
