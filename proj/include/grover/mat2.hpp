#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace grover {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix in the two-dimensional invariant subspace.
/// Row/column index 0 is the unmarked uniform component |R>, index 1 the
/// marked uniform component |T>.
struct Mat2 {
  std::array<cplx, 4> v{};  // row-major

  cplx& operator()(int r, int c) { return v[static_cast<std::size_t>(2 * r + c)]; }
  const cplx& operator()(int r, int c) const { return v[static_cast<std::size_t>(2 * r + c)]; }

  static Mat2 identity() { return Mat2{{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}}}; }

  Mat2 adjoint() const {
    return Mat2{{std::conj(v[0]), std::conj(v[2]), std::conj(v[1]), std::conj(v[3])}};
  }

  cplx trace() const { return v[0] + v[3]; }
  cplx det() const { return v[0] * v[3] - v[1] * v[2]; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{{a.v[0] * b.v[0] + a.v[1] * b.v[2], a.v[0] * b.v[1] + a.v[1] * b.v[3],
                 a.v[2] * b.v[0] + a.v[3] * b.v[2], a.v[2] * b.v[1] + a.v[3] * b.v[3]}};
  }

  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return Mat2{{a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2], a.v[3] - b.v[3]}};
  }
};

/// Largest entrywise absolute value; the matrix norm used by every tolerance
/// check in this library.
inline double max_abs(const Mat2& a) {
  double best = 0.0;
  for (const cplx& z : a.v) best = std::max(best, std::abs(z));
  return best;
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) { return max_abs(a - b); }

}  // namespace grover
