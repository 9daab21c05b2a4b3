#pragma once

#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "systole/errors.hpp"

namespace systole {

/// Lobachevsky function Λ(θ) = −∫₀^θ log|2 sin t| dt.
///
/// Uses Λ(θ) = θ − θ·log(2θ) + Σₙ ζ(2n)/(n(2n+1)) · (θ/π)^{2n} · θ on
/// 0 < θ ≤ π/2, with Λ odd and π-periodic for the remaining arguments.
template <typename Scalar>
Scalar lobachevsky(Scalar theta) {
  using std::abs;
  using std::floor;
  using std::log;
  const Scalar pi = boost::math::constants::pi<Scalar>();
  theta -= pi * floor(theta / pi);  // [0, π)
  if (theta == 0) return Scalar(0);
  if (theta > pi / 2) return -lobachevsky(pi - theta);

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar ratio = (theta / pi) * (theta / pi);
  Scalar sum = theta - theta * log(2 * theta);
  Scalar power = theta;
  for (int n = 1; n < 10000; ++n) {
    power *= ratio;
    const Scalar term = boost::math::zeta(Scalar(2 * n)) * power / Scalar(n * (2 * n + 1));
    sum += term;
    if (abs(term) <= eps * abs(sum)) break;
  }
  return sum;
}

/// Volume of the regular ideal tetrahedron, 3·Λ(π/3).
///
/// Frozen from a 40-digit evaluation of the series above; the unit tests
/// recompute it in 50-digit arithmetic and by quadrature.
inline constexpr long double kRegularIdealTetrahedronVolume =
    1.014941606409653625021202554274520286L;

/// Adams–Reid systole constant Re(2·arccosh(1 + 2π²i)), frozen to 20 digits.
inline constexpr long double kAdamsReidConstant = 7.3553436809554675981L;

/// Covolume of PSL(2, Z[√−2]) from Humbert's formula |D|^{3/2}·ζ_K(2)/(4π²)
/// with D = −8, i.e. (2√2/3)·L(2, χ₋₈). Frozen to 20 digits.
inline constexpr long double kBianchiCovolumeD2 = 1.0038410033411981373L;

/// Smallest volume of a maximal cusp with waist size at least 2π: (√3/4)(2π)² = √3·π².
template <typename Scalar = double>
Scalar min_cusp_volume_for_long_waist() {
  using std::sqrt;
  const Scalar pi = boost::math::constants::pi<Scalar>();
  return sqrt(Scalar(3)) * pi * pi;
}

/// Cusp-density bound C₀ = √3 / (2·V₀).
template <typename Scalar = double>
Scalar cusp_density_constant() {
  using std::sqrt;
  return sqrt(Scalar(3)) / (2 * Scalar(kRegularIdealTetrahedronVolume));
}

}  // namespace systole
