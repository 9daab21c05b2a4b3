#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace systole {

enum class GridScale { Linear, Logarithmic };

/// `points` samples from lo to hi inclusive.
struct GridSpec {
  double lo = 0;
  double hi = 1;
  std::size_t points = 2;
  GridScale scale = GridScale::Linear;

  /// Throws std::invalid_argument unless lo < hi, points ≥ 2 (lo > 0 for log scale).
  void validate() const;
  std::vector<double> values() const;

  /// A degenerate single-point "grid" {x}.
  static GridSpec single(double x);
};

enum class CertificateStatus { Pass, Fail };

/// Outcome of a certification sweep. Margins are oriented so that a
/// nonnegative margin means the claimed inequality holds at that point;
/// status is Pass iff worst_margin ≥ 0. An empty sweep has worst_margin = +inf.
struct CertificateReport {
  std::string claim_id;
  CertificateStatus status = CertificateStatus::Pass;
  double worst_margin = 0;
  std::vector<double> worst_point;
  std::size_t points_checked = 0;
  std::optional<std::uint64_t> seed;
};

struct MarginSample {
  std::vector<double> point;
  double margin;
};

/// Bracketed bisection: requires f(lo) and f(hi) of opposite signs,
/// refines until the bracket is a few ulps wide. std::nullopt without a sign change.
std::optional<double> bisect_root(const std::function<double(double)>& f, double lo, double hi,
                                  int max_iter = 400);

struct Techlem2Options {
  std::size_t ell_points = 10000;
  unsigned jobs = 1;
  /// Skip the realizable-regime precondition to map behaviour below it.
  bool probe = false;
  /// Bound under test; replaceable to check the harness' own sensitivity.
  std::function<double(double)> bound;
  /// Optional per-Vc worst margins, in grid order.
  std::vector<MarginSample>* margins = nullptr;
};

/// max over ell ∈ [2π, √(4Vc/√3)] of S(ell) against √(2Vc^{4/3}+4), for each Vc.
/// worst_point is [Vc, ell].
CertificateReport certify_techlem2(const GridSpec& vc_grid, const Techlem2Options& options = {});

struct CrossingOptions {
  double tolerance = 1e-10;  // relative, bisection root vs closed form
  std::size_t monotonicity_points = 1000;
  unsigned jobs = 1;
  std::vector<MarginSample>* margins = nullptr;
};

/// Root of F₁ − F₂ on (V, ∞) by bisection against the closed-form crossing,
/// plus a monotonicity audit of F₁ (increasing) and F₂ (decreasing) on (V, 100·X*].
/// worst_point is [V, X].
CertificateReport certify_crossing(const GridSpec& v_grid, const CrossingOptions& options = {});

struct LengthLemmaOptions {
  std::size_t samples = 100000;
  double r_max = 100;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  std::vector<MarginSample>* margins = nullptr;
};

/// Random loxodromics with |trace| ≤ r_max satisfy length ≤ log(|trace|² + 4);
/// purely imaginary traces r·i (r = 0.1, 0.2, … ≤ min(100, r_max)) have larger
/// eigenvalue modulus (r + √(r² + 4))/2; trace 2 + 4π²i gives length 7.35534.
/// points_checked counts every evaluated element. worst_point is [Re tr, Im tr].
CertificateReport certify_length_lemma(const LengthLemmaOptions& options = {});

struct CubicOptions {
  double tolerance = 1e-9;
  std::size_t derivative_points = 2001;
  double derivative_range = 1e3;
};

/// Sign claims about f(x) = 4x³ − x² + 16x − 4Vc² used to bound min(a, t):
/// f′ > 0, f(√2·Vc^{2/3}) > 0, a(x₀) < a(√2·Vc^{2/3}) at the root x₀,
/// t(4Vc/√3) = 7Vc/√3 < 8Vc^{4/3} + 16, and a negative discriminant for
/// (8 − 2√2)z² − √2z + 16. worst_point is [Vc, x] ([x] for Vc-free claims).
CertificateReport certify_cubic_claims(const GridSpec& vc_grid, const CubicOptions& options = {});

}  // namespace systole
