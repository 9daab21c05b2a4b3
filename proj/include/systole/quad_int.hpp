#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace systole {

using BigInt = boost::multiprecision::cpp_int;

/// Element a + b·√−d of the order Z[√−d], with exact integer coordinates.
class QuadInt {
 public:
  /// Throws std::invalid_argument unless d is a positive squarefree integer.
  QuadInt(BigInt a, BigInt b, std::int64_t d);

  static QuadInt zero(std::int64_t d) { return {0, 0, d}; }
  static QuadInt one(std::int64_t d) { return {1, 0, d}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// a² + d·b².
  BigInt norm() const { return a_ * a_ + d_ * b_ * b_; }
  QuadInt conj() const { return {a_, -b_, d_, Unchecked{}}; }

  QuadInt operator-() const { return {-a_, -b_, d_, Unchecked{}}; }
  QuadInt& operator+=(const QuadInt& o);
  QuadInt& operator-=(const QuadInt& o);
  QuadInt& operator*=(const QuadInt& o);

  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Ordering by (a, b); used for canonical sorting only.
  friend bool operator<(const QuadInt& x, const QuadInt& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

  /// Complex modulus √(a² + d·b²) in floating point.
  double modulus() const;

  /// Human form, e.g. "3+√-2", "7+6√-2", "-1", "-√-2".
  std::string to_string() const;

 private:
  struct Unchecked {};
  QuadInt(BigInt a, BigInt b, std::int64_t d, Unchecked)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {}
  void check_same_ring(const QuadInt& o) const;

  BigInt a_;
  BigInt b_;
  std::int64_t d_;
};

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

/// x^n by repeated squaring, n ≥ 0.
QuadInt pow(QuadInt x, unsigned n);

/// The quotient x / y when it lies in Z[√−d]; std::nullopt otherwise (and for y = 0).
std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y);

/// y | x in Z[√−d] (0 divides only 0).
bool divides(const QuadInt& y, const QuadInt& x);

bool is_squarefree(std::int64_t d);
bool is_prime(std::int64_t p);

}  // namespace systole
