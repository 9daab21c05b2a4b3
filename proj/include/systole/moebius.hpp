#pragma once

#include <cmath>
#include <complex>
#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "systole/errors.hpp"

namespace systole {

/// Working tolerances for floating-point PSL(2,C) computations.
template <typename Scalar>
struct Tolerances {
  Scalar det = Scalar(1e-12);       // singularity / determinant check
  Scalar classify = Scalar(1e-9);   // "trace is real", "|trace| == 2"
  Scalar num = Scalar(1e-9);        // general numeric comparisons
};

enum class ElementClass { Identity, Parabolic, Elliptic, Loxodromic };

inline std::string_view to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Identity: return "identity";
    case ElementClass::Parabolic: return "parabolic";
    case ElementClass::Elliptic: return "elliptic";
    case ElementClass::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

/// A point of the Riemann sphere C ∪ {∞}.
template <typename Scalar>
class ExtendedComplex {
 public:
  using Complex = std::complex<Scalar>;

  ExtendedComplex(Complex z) : value_(z) {}  // NOLINT: implicit from finite points
  static ExtendedComplex infinity() { return ExtendedComplex(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Throws std::bad_optional_access at ∞.
  Complex value() const { return value_.value(); }

 private:
  ExtendedComplex() = default;
  std::optional<Complex> value_;
};

template <typename Scalar>
struct IsometricSphere {
  std::complex<Scalar> center;
  Scalar radius;
};

template <typename Scalar>
bool is_finite(const std::complex<Scalar>& z) {
  using std::isfinite;
  return isfinite(z.real()) && isfinite(z.imag());
}

/// An element of PSL(2,C), stored as one SL(2,C) representative.
///
/// The constructor rescales by a square root of the determinant, so any
/// nonsingular matrix is accepted. Predicates below never depend on which
/// of the two representatives ±M is stored.
template <typename Scalar = double>
class MoebiusElement {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, 2, 2>;

  MoebiusElement(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                 Scalar det_tol = Tolerances<Scalar>{}.det) {
    m_ << a, b, c, d;
    normalize(det_tol);
  }

  explicit MoebiusElement(const Matrix& m, Scalar det_tol = Tolerances<Scalar>{}.det)
      : m_(m) {
    normalize(det_tol);
  }

  static MoebiusElement identity() { return {Complex(1), Complex(0), Complex(0), Complex(1)}; }

  /// Companion-form element ((t, -1), (1, 0)) with trace t.
  static MoebiusElement with_trace(const Complex& t) {
    return {t, Complex(-1), Complex(1), Complex(0)};
  }

  /// diag(λ, 1/λ), acting as z ↦ λ² z.
  static MoebiusElement diagonal(const Complex& lambda) {
    return {lambda, Complex(0), Complex(0), Complex(1) / lambda};
  }

  const Complex& a() const { return m_(0, 0); }
  const Complex& b() const { return m_(0, 1); }
  const Complex& c() const { return m_(1, 0); }
  const Complex& d() const { return m_(1, 1); }
  const Matrix& matrix() const { return m_; }

  Complex determinant() const { return m_.determinant(); }

  MoebiusElement inverse() const { return {d(), -b(), -c(), a()}; }

  MoebiusElement operator-() const { return MoebiusElement(Matrix(-m_)); }

  friend MoebiusElement operator*(const MoebiusElement& g, const MoebiusElement& h) {
    return MoebiusElement(Matrix(g.m_ * h.m_));
  }

 private:
  void normalize(Scalar det_tol) {
    using std::abs;
    using std::sqrt;
    for (Eigen::Index i = 0; i < 4; ++i) {
      if (!is_finite(m_(i))) throw DomainError("MoebiusElement: non-finite matrix entry");
    }
    const Scalar scale = std::max(Scalar(1), m_.cwiseAbs2().maxCoeff());
    const Complex det = m_.determinant();
    if (abs(det) <= det_tol * scale) throw DomainError("MoebiusElement: singular matrix");
    m_ /= sqrt(det);
  }

  Matrix m_;
};

using Moebius = MoebiusElement<double>;

/// Entrywise comparison of g with h or -h.
template <typename Scalar>
bool approx_equal(const MoebiusElement<Scalar>& g, const MoebiusElement<Scalar>& h,
                  Scalar tol = Tolerances<Scalar>{}.num) {
  const auto& x = g.matrix();
  const auto& y = h.matrix();
  return (x - y).cwiseAbs().maxCoeff() <= tol || (x + y).cwiseAbs().maxCoeff() <= tol;
}

/// a + d of the stored representative; only |trace| and trace² are sign-free.
template <typename Scalar>
std::complex<Scalar> trace(const MoebiusElement<Scalar>& g) {
  return g.matrix().trace();
}

template <typename Scalar>
ElementClass classify(const MoebiusElement<Scalar>& g, const Tolerances<Scalar>& tol = {}) {
  using std::abs;
  if (approx_equal(g, MoebiusElement<Scalar>::identity(), tol.classify)) {
    return ElementClass::Identity;
  }
  const auto t = trace(g);
  if (abs(t.imag()) > tol.classify) return ElementClass::Loxodromic;
  const Scalar r = abs(t.real());
  if (abs(r - Scalar(2)) <= tol.classify) return ElementClass::Parabolic;
  return r < Scalar(2) ? ElementClass::Elliptic : ElementClass::Loxodromic;
}

/// 2·arccosh(trace/2) on the principal branch, sign-normalized so Re ≥ 0.
/// Real part is the translation length, imaginary part the rotation angle.
template <typename Scalar>
std::complex<Scalar> complex_length(const MoebiusElement<Scalar>& g) {
  auto len = Scalar(2) * std::acosh(trace(g) / Scalar(2));
  return len.real() < 0 ? -len : len;
}

/// Translation length 2·log|λ| of a loxodromic element, |λ| ≥ 1 its larger eigenvalue.
template <typename Scalar>
Scalar translation_length(const MoebiusElement<Scalar>& g, const Tolerances<Scalar>& tol = {}) {
  const auto cls = classify(g, tol);
  if (cls != ElementClass::Loxodromic) {
    throw NotLoxodromicError("translation_length: element is " + std::string(to_string(cls)));
  }
  using std::abs;
  return abs(complex_length(g).real());
}

/// Largest eigenvalue modulus, by direct eigen-decomposition of the matrix.
template <typename Scalar>
Scalar max_eigenvalue_modulus(const MoebiusElement<Scalar>& g) {
  Eigen::ComplexEigenSolver<typename MoebiusElement<Scalar>::Matrix> solver(g.matrix(), false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

template <typename Scalar>
IsometricSphere<Scalar> isometric_sphere(const MoebiusElement<Scalar>& g,
                                         const Tolerances<Scalar>& tol = {}) {
  using std::abs;
  if (abs(g.c()) <= tol.det) {
    throw DomainError("isometric_sphere: c = 0, element fixes infinity");
  }
  return {-g.d() / g.c(), Scalar(1) / abs(g.c())};
}

/// Fractional-linear action z ↦ (az + b)/(cz + d) on C ∪ {∞}.
template <typename Scalar>
ExtendedComplex<Scalar> apply(const MoebiusElement<Scalar>& g, const ExtendedComplex<Scalar>& p,
                              const Tolerances<Scalar>& tol = {}) {
  using std::abs;
  using Point = ExtendedComplex<Scalar>;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  if (p.is_infinite()) {
    if (abs(g.c()) <= tol.det * abs(g.a())) return Point::infinity();
    return Point(g.a() / g.c());
  }
  const auto z = p.value();
  const auto den = g.c() * z + g.d();
  // Pole test scaled to the size of the summands so that −d/c itself maps to ∞.
  if (abs(den) <= 16 * eps * (abs(g.c() * z) + abs(g.d()))) return Point::infinity();
  return Point((g.a() * z + g.b()) / den);
}

}  // namespace systole
