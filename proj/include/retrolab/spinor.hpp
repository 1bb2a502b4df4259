#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace rlab {

using cplx = std::complex<double>;
using Spinor = std::array<cplx, 2>;

// 2x2 complex matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  cplx a, b, c, d;

  Spinor apply(const Spinor& s) const {
    return {a * s[0] + b * s[1], c * s[0] + d * s[1]};
  }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

// Fixed gamma-matrix representation:
//   gamma0 = [[1, 0], [0, -1]]
//   gamma1 = [[0, 1], [-1, 0]]
//   alpha  = gamma0 * gamma1 = [[0, 1], [1, 0]]
// Consequences used throughout: j0 = |psi1|^2 + |psi2|^2 and
// j1 = 2 Re(conj(psi1) psi2), both real.
inline Mat2 gamma0() { return {1.0, 0.0, 0.0, -1.0}; }
inline Mat2 gamma1() { return {0.0, 1.0, -1.0, 0.0}; }
inline Mat2 alpha_matrix() { return {0.0, 1.0, 1.0, 0.0}; }

inline double spinor_norm2(const Spinor& s) {
  return std::norm(s[0]) + std::norm(s[1]);
}

// Positive-energy eigenspinor of the free Dirac mode Hamiltonian
// h(k) = alpha*k + gamma0*m, unit-normalized. Requires m > 0.
inline Spinor positive_energy_spinor(double k, double m) {
  const double e = std::sqrt(k * k + m * m);
  const double inv = 1.0 / std::sqrt(2.0 * e * (e + m));
  return {cplx((e + m) * inv, 0.0), cplx(k * inv, 0.0)};
}

inline double dispersion_energy(double k, double m) {
  return std::sqrt(k * k + m * m);
}

}  // namespace rlab
