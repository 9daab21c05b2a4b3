#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include <boost/math/constants/constants.hpp>

#include "systole/constants.hpp"
#include "systole/cusp_lattice.hpp"
#include "systole/errors.hpp"

namespace systole {

namespace detail {

template <typename Scalar>
Scalar pi() {
  return boost::math::constants::pi<Scalar>();
}

template <typename Scalar>
Scalar cbrt_pow(Scalar x, int num) {  // x^{num/3}, x ≥ 0
  using std::cbrt;
  using std::pow;
  return pow(cbrt(x), Scalar(num));
}

}  // namespace detail

/// Trace-modulus bound AR(w) = √(w⁴ + 4) from a slope of length w > 2.
template <typename Scalar>
Scalar ar_trace_bound(Scalar w) {
  using std::sqrt;
  if (!(w > 2)) throw DomainError("ar_trace_bound: slope length must exceed 2");
  return sqrt(w * w * w * w + 4);
}

/// Re(2·arccosh((2 + w²i)/2)): exact translation length of the worst-case
/// loxodromic of trace 2 + w²i.
template <typename Scalar>
Scalar ar_length_bound(Scalar w) {
  using std::abs;
  if (!(w > 2)) throw DomainError("ar_length_bound: slope length must exceed 2");
  const std::complex<Scalar> half_trace(Scalar(1), w * w / 2);
  return abs((Scalar(2) * std::acosh(half_trace)).real());
}

/// log(R² + 4): longest translation length of a loxodromic with |trace| ≤ R.
template <typename Scalar>
Scalar loxodromic_length_bound(Scalar r) {
  using std::log;
  if (!(r >= 0)) throw DomainError("loxodromic_length_bound: R must be nonnegative");
  return log(r * r + 4);
}

/// Half-diagonal of the ell × (2Vc/ell) rectangle: √(ell²/4 + Vc²/ell²).
template <typename Scalar>
Scalar t_of_ell(Scalar ell, Scalar vc) {
  using std::sqrt;
  if (!(ell > 0) || !(vc > 0)) throw DomainError("t_of_ell: ell and Vc must be positive");
  return sqrt(ell * ell / 4 + vc * vc / (ell * ell));
}

template <typename Scalar>
Scalar s_of_ell(Scalar ell, Scalar vc) {
  return std::min(t_of_ell(ell, vc), ar_trace_bound(ell));
}

/// √(ell² + 4): trace bound when the shortest 0→∞ element is parabolic.
template <typename Scalar>
Scalar case2_trace_bound(Scalar ell) {
  using std::sqrt;
  if (!(ell >= 0)) throw DomainError("case2_trace_bound: ell must be nonnegative");
  return sqrt(ell * ell + 4);
}

/// Threshold 8/(3√3) above which the combined trace bound dominates the
/// parabolic case at the largest admissible waist.
template <typename Scalar = double>
Scalar techlem2_threshold() {
  using std::sqrt;
  return Scalar(8) / (3 * sqrt(Scalar(3)));
}

/// √(2·Vc^{4/3} + 4) = AR(2^{1/4}·Vc^{1/3}).
///
/// Defined for every Vc ≥ 0 so that sweeps can probe below the threshold;
/// use techlem2_bound_checked where the hypothesis must hold.
template <typename Scalar>
Scalar techlem2_bound(Scalar vc) {
  using std::sqrt;
  if (!(vc >= 0)) throw DomainError("techlem2_bound: Vc must be nonnegative");
  return sqrt(2 * detail::cbrt_pow(vc, 4) + 4);
}

template <typename Scalar>
Scalar techlem2_bound_checked(Scalar vc) {
  if (!(vc >= techlem2_threshold<Scalar>())) {
    throw DomainError("techlem2_bound: Vc below 8/(3*sqrt(3))");
  }
  return techlem2_bound(vc);
}

/// max{7.35534…, log(2(C₀V)^{4/3} + 8)}: systole bound for a cusped manifold of volume V.
template <typename Scalar>
Scalar cusped_systole_bound(Scalar v) {
  using std::log;
  if (!(v > 0)) throw DomainError("cusped_systole_bound: volume must be positive");
  const Scalar vc = cusp_density_constant<Scalar>() * v;
  return std::max(Scalar(kAdamsReidConstant), log(2 * detail::cbrt_pow(vc, 4) + 8));
}

/// Largest possible shortest filling slope when filling a manifold of
/// volume X yields volume V: 2π / √(1 − (V/X)^{2/3}).
template <typename Scalar>
Scalar fkp_min_slope_bound(Scalar v, Scalar x) {
  using std::sqrt;
  if (!(v > 0) || !(x > v)) throw DomainError("fkp_min_slope_bound: need X > V > 0");
  return 2 * detail::pi<Scalar>() / sqrt(1 - detail::cbrt_pow(v / x, 2));
}

/// Volume ratio (1 − (2π/ell)²)^{3/2} guaranteed after filling slopes of length ≥ ell.
template <typename Scalar>
Scalar fkp_volume_ratio(Scalar ell_min) {
  using std::pow;
  const Scalar two_pi = 2 * detail::pi<Scalar>();
  if (!(ell_min > two_pi)) throw DomainError("fkp_volume_ratio: slope must exceed 2*pi");
  const Scalar q = two_pi / ell_min;
  return pow(1 - q * q, Scalar(1.5));
}

/// F₁(X) = √(2(C₀X)^{4/3} + 4).
template <typename Scalar>
Scalar f1(Scalar x) {
  if (!(x > 0)) throw DomainError("f1: X must be positive");
  return techlem2_bound(cusp_density_constant<Scalar>() * x);
}

/// F₂(X) = √(16π⁴ / (1 − (V/X)^{2/3})² + 4) = AR(fkp_min_slope_bound(V, X)).
template <typename Scalar>
Scalar f2(Scalar x, Scalar v) {
  using std::sqrt;
  if (!(v > 0) || !(x > v)) throw DomainError("f2: need X > V > 0");
  const Scalar pi = detail::pi<Scalar>();
  const Scalar gap = 1 - detail::cbrt_pow(v / x, 2);
  return sqrt(16 * pi * pi * pi * pi / (gap * gap) + 4);
}

/// Unique X > V with F₁(X) = F₂(X): (V^{2/3} + 4π²/(√2·C₀^{2/3}))^{3/2}.
template <typename Scalar>
Scalar crossing_volume(Scalar v) {
  using std::pow;
  using std::sqrt;
  if (!(v >= 0)) throw DomainError("crossing_volume: V must be nonnegative");
  const Scalar pi = detail::pi<Scalar>();
  const Scalar c0 = cusp_density_constant<Scalar>();
  const Scalar inner = detail::cbrt_pow(v, 2) + 4 * pi * pi / (sqrt(Scalar(2)) * detail::cbrt_pow(c0, 2));
  return pow(inner, Scalar(1.5));
}

/// log((√2·(C₀V)^{2/3} + 4π²)² + 8): systole bound for hyperbolic link
/// complements in a closed manifold of volume V (V = 0 for non-hyperbolic M).
template <typename Scalar>
Scalar link_systole_bound(Scalar v) {
  using std::log;
  using std::sqrt;
  if (!(v >= 0)) throw DomainError("link_systole_bound: volume must be nonnegative");
  const Scalar pi = detail::pi<Scalar>();
  const Scalar base = sqrt(Scalar(2)) * detail::cbrt_pow(cusp_density_constant<Scalar>() * v, 2) +
                      4 * pi * pi;
  return log(base * base + 8);
}

/// All quantities derived from a closed-manifold volume V.
template <typename Scalar>
struct BoundProfile {
  Scalar volume;
  Scalar cusp_volume;    // C₀·V
  Scalar ell_max;        // √(4·Vc/√3); 0 when V = 0
  Scalar cusped_bound;   // cusped_systole_bound(V); NaN when V = 0
  Scalar link_bound;     // link_systole_bound(V)
  Scalar crossing;       // X*(V)
};

template <typename Scalar>
BoundProfile<Scalar> make_profile(Scalar v) {
  if (!(v >= 0)) throw DomainError("make_profile: volume must be nonnegative");
  BoundProfile<Scalar> p{};
  p.volume = v;
  p.cusp_volume = cusp_density_constant<Scalar>() * v;
  p.ell_max = v > 0 ? max_waist_for_cusp_volume(p.cusp_volume) : Scalar(0);
  p.cusped_bound = v > 0 ? cusped_systole_bound(v) : std::numeric_limits<Scalar>::quiet_NaN();
  p.link_bound = link_systole_bound(v);
  p.crossing = crossing_volume(v);
  return p;
}

}  // namespace systole
