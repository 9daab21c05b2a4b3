#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "systole/errors.hpp"

namespace systole {

/// Reduced form of a cusp lattice, rotated so the shortest translation is
/// the positive real number `ell`.
///
/// `z` is the second generator in that frame: |z| ≥ ell, Im z > 0 and
/// -ell/2 < Re z ≤ ell/2 (the boundary tie Re z = ±ell/2 resolves to +ell/2).
/// `shortest` and `second` are the same basis in the original frame.
template <typename Scalar>
struct ReducedBasis {
  Scalar ell;
  std::complex<Scalar> z;
  Scalar area;
  std::complex<Scalar> shortest;
  std::complex<Scalar> second;
};

/// Rank-2 lattice of translations of C generated by t1 and t2.
template <typename Scalar = double>
class CuspLattice {
 public:
  using Complex = std::complex<Scalar>;

  /// Relative degeneracy threshold: area must exceed area_tol · max(|t1|,|t2|)².
  static constexpr Scalar kAreaTolerance = Scalar(1e-12);

  CuspLattice(const Complex& t1, const Complex& t2) : t1_(t1), t2_(t2) {
    using std::isfinite;
    if (!isfinite(t1.real()) || !isfinite(t1.imag()) || !isfinite(t2.real()) ||
        !isfinite(t2.imag())) {
      throw DomainError("CuspLattice: non-finite generator");
    }
    using std::abs;
    const Scalar scale = std::max(std::norm(t1), std::norm(t2));
    if (!(area() > kAreaTolerance * scale)) {
      throw DegenerateLatticeError("CuspLattice: generators are linearly dependent");
    }
  }

  /// Rectangular lattice with sides `width` (real direction) and `height`.
  static CuspLattice rectangular(Scalar width, Scalar height) {
    return {Complex(width, 0), Complex(0, height)};
  }

  /// Equilateral lattice with the given side.
  static CuspLattice hexagonal(Scalar side) {
    using std::sqrt;
    return {Complex(side, 0), Complex(side / 2, side * sqrt(Scalar(3)) / 2)};
  }

  const Complex& t1() const { return t1_; }
  const Complex& t2() const { return t2_; }

  Scalar area() const {
    using std::abs;
    return abs(std::imag(std::conj(t1_) * t2_));
  }

 private:
  Complex t1_;
  Complex t2_;
};

/// Gauss–Lagrange reduction followed by normalization into the region
/// { |z| ≥ ell, |Re z| ≤ ell/2, Im z > 0 }.
template <typename Scalar>
ReducedBasis<Scalar> reduce(const CuspLattice<Scalar>& lattice) {
  using Complex = std::complex<Scalar>;
  using std::abs;
  using std::round;

  Complex u = lattice.t1();
  Complex v = lattice.t2();
  if (std::norm(v) < std::norm(u)) std::swap(u, v);
  for (int iter = 0; iter < 10000; ++iter) {
    const Scalar m = round(std::real(v * std::conj(u)) / std::norm(u));
    if (m != 0) v -= m * u;
    if (std::norm(v) < std::norm(u)) {
      std::swap(u, v);
    } else {
      break;
    }
  }

  const Scalar ell = abs(u);
  const Complex rot = std::conj(u) / ell;
  Complex z = v * rot;
  if (z.imag() < 0) {
    z = -z;
    v = -v;
  }
  // Reduction leaves |Re z| ≤ ell/2 up to rounding; snap the boundary tie to +ell/2.
  const Scalar tie = ell * Scalar(64) * std::numeric_limits<Scalar>::epsilon();
  const Scalar shift = round(z.real() / ell);
  if (shift != 0) {
    z -= shift * ell;
    v -= shift * u;
  }
  if (z.real() < -ell / 2 + tie) {
    z += ell;
    v += u;
  }
  return {ell, z, ell * z.imag(), u, v};
}

template <typename Scalar>
Scalar waist_size(const CuspLattice<Scalar>& lattice) {
  return reduce(lattice).ell;
}

/// Diameter of the flat torus C / lattice: the circumradius of the Voronoi
/// cell, i.e. the largest distance from any point of C to the lattice.
///
/// For a reduced basis with Re z ≥ 0 the triangle (0, ell, z) is a
/// non-obtuse Delaunay triangle, and every Delaunay triangle is congruent
/// to it, so its circumradius |z|·|z − ell| / (2 Im z) is the answer.
template <typename Scalar>
Scalar torus_diameter(const CuspLattice<Scalar>& lattice) {
  using std::abs;
  const auto rb = reduce(lattice);
  const std::complex<Scalar> z(abs(rb.z.real()), rb.z.imag());
  return abs(z) * abs(z - rb.ell) / (2 * z.imag());
}

/// Volume of the cusp above the torus: half its area.
template <typename Scalar>
Scalar cusp_volume(const CuspLattice<Scalar>& lattice) {
  return lattice.area() / 2;
}

/// Upper bound on the waist size of a maximal cusp of volume `vc`,
/// from area = 2·vc ≥ ell·Im z ≥ (√3/2)·ell².
template <typename Scalar>
Scalar max_waist_for_cusp_volume(Scalar vc) {
  using std::sqrt;
  if (!(vc > 0)) throw DomainError("max_waist_for_cusp_volume: cusp volume must be positive");
  return sqrt(4 * vc / sqrt(Scalar(3)));
}

}  // namespace systole
