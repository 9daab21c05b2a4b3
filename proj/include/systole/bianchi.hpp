#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "systole/moebius.hpp"
#include "systole/quad_int.hpp"

namespace systole {

inline BigInt norm(const QuadInt& x) { return x.norm(); }

/// Principal level (πⁿ) of Z[√−d].
struct CongruenceLevel {
  QuadInt pi;
  unsigned n;
  QuadInt level;  // πⁿ
  BigInt norm;    // N(π)ⁿ

  /// Throws std::invalid_argument for n = 0 or π = 0.
  static CongruenceLevel make(const QuadInt& pi, unsigned n);

  /// |πⁿ| = N(π)^{n/2}.
  double modulus() const;
};

/// 2×2 matrix over Z[√−d].
struct QuadMatrix {
  QuadInt a, b, c, d;

  QuadInt trace() const { return a + d; }
  QuadInt determinant() const { return a * d - b * c; }
  QuadMatrix operator-() const { return {-a, -b, -c, -d}; }
  bool is_plus_minus_identity() const;

  /// Representative of {M, −M} whose first nonzero entry has a > 0, or a = 0 and b > 0.
  QuadMatrix canonical_sign() const;

  friend bool operator==(const QuadMatrix& x, const QuadMatrix& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator<(const QuadMatrix& x, const QuadMatrix& y);
};

/// Exact classification for determinant-one matrices, from the integral trace.
ElementClass classify(const QuadMatrix& m);

/// An element ((aπⁿ+1, bπⁿ), (cπⁿ, dπⁿ+1)) of Γ(πⁿ) with its parameters.
///
/// The determinant condition forces a + d = q·πⁿ, so the trace is q·π²ⁿ + 2.
struct CongruenceElement {
  QuadMatrix matrix;
  QuadMatrix parameters;  // (a, b, c, d) as a matrix for convenience
  QuadInt trace_multiplier;  // q
};

/// Solution π = a + b√−d of a² + d·b² = p with a ≥ 0, b > 0 and a minimal;
/// std::nullopt when p does not split (or ramify) as a norm.
/// Throws std::invalid_argument if p is not prime or d is not squarefree.
std::optional<QuadInt> split_prime(std::int64_t p, std::int64_t d);

/// [PSL₂(O) : Γ(πⁿ)] = N(πⁿ)³/2 · (1 − 1/N(π)²), for N(π) an odd prime.
/// Throws DomainError when N(π) is not an odd prime or the value is not integral.
BigInt newman_index(const CongruenceLevel& level);

double volume_of_level(const CongruenceLevel& level, double base_covolume);

/// max(0, N(π)ⁿ − 2): lower bound on |q·π²ⁿ + 2| over q ≠ 0.
BigInt min_loxodromic_trace_lower_bound(const CongruenceLevel& level);

/// All elements of Γ(πⁿ) whose parameters a, b, c, d have both coordinates
/// in [−height, height], identified up to sign and sorted by canonical_sign().
/// Each matrix is the representative congruent to I mod πⁿ.
std::vector<CongruenceElement> enumerate_congruence_elements(const CongruenceLevel& level,
                                                             unsigned height, unsigned jobs = 1);

/// True iff x ≡ 2 (mod π²ⁿ).
bool trace_in_congruence_class(const QuadInt& trace, const CongruenceLevel& level);

struct GrowthRow {
  unsigned n;
  BigInt index;
  double volume;
  BigInt trace_lb;
  double systole_lb;           // log(max(1, trace_lb)² / 4)
  double ratio;                // systole_lb / log(volume)
  double uncorrected_systole_lb;  // 2n·log N(π) − log 4, ignoring the +2 in the trace
};

std::vector<GrowthRow> systole_growth_table(const QuadInt& pi, unsigned n_max,
                                            double base_covolume);

/// Every x ∈ Z[√−d] with 0 < |x| ≤ bound, sorted by norm then (a, b).
std::vector<QuadInt> count_bounded_ideal_elements(std::int64_t d, double bound);

}  // namespace systole
