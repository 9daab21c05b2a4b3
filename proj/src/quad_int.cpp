#include "systole/quad_int.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace systole {

bool is_squarefree(std::int64_t d) {
  if (d <= 0) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

QuadInt::QuadInt(BigInt a, BigInt b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!is_squarefree(d)) {
    throw std::invalid_argument("QuadInt: d = " + std::to_string(d) + " is not positive squarefree");
  }
}

void QuadInt::check_same_ring(const QuadInt& o) const {
  if (d_ != o.d_) throw std::invalid_argument("QuadInt: mixing elements of different rings");
}

QuadInt& QuadInt::operator+=(const QuadInt& o) {
  check_same_ring(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
  check_same_ring(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
  check_same_ring(o);
  BigInt re = a_ * o.a_ - d_ * b_ * o.b_;
  BigInt im = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(re);
  b_ = std::move(im);
  return *this;
}

double QuadInt::modulus() const { return std::sqrt(norm().convert_to<double>()); }

std::string QuadInt::to_string() const {
  std::ostringstream os;
  const std::string root = "√-" + std::to_string(d_);
  if (b_.is_zero()) {
    os << a_;
    return os.str();
  }
  if (!a_.is_zero()) os << a_ << (b_ > 0 ? "+" : "-");
  else if (b_ < 0) os << "-";
  const BigInt mag = abs(b_);
  if (mag != 1) os << mag;
  os << root;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << x.to_string(); }

QuadInt pow(QuadInt x, unsigned n) {
  QuadInt result = QuadInt::one(x.d());
  while (n > 0) {
    if (n & 1u) result *= x;
    n >>= 1;
    if (n > 0) x *= x;
  }
  return result;
}

std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y) {
  if (x.d() != y.d()) throw std::invalid_argument("exact_div: mixing elements of different rings");
  if (y.is_zero()) return std::nullopt;
  // x / y = x·conj(y) / N(y)
  const QuadInt num = x * y.conj();
  const BigInt n = y.norm();
  if (num.a() % n != 0 || num.b() % n != 0) return std::nullopt;
  return QuadInt(num.a() / n, num.b() / n, x.d());
}

bool divides(const QuadInt& y, const QuadInt& x) {
  if (y.is_zero()) return x.is_zero();
  return exact_div(x, y).has_value();
}

}  // namespace systole
