#include "systole/bianchi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/integer.hpp>

namespace systole {

namespace {

bool canonical_positive(const QuadInt& x) { return x.a() > 0 || (x.a().is_zero() && x.b() > 0); }

bool in_box(const QuadInt& x, const BigInt& h) {
  return abs(x.a()) <= h && abs(x.b()) <= h;
}

std::vector<QuadInt> box_elements(std::int64_t d, unsigned height) {
  std::vector<QuadInt> out;
  const auto h = static_cast<std::int64_t>(height);
  out.reserve(static_cast<std::size_t>((2 * h + 1) * (2 * h + 1)));
  for (std::int64_t a = -h; a <= h; ++a) {
    for (std::int64_t b = -h; b <= h; ++b) out.emplace_back(a, b, d);
  }
  return out;
}

CongruenceElement make_element(const CongruenceLevel& level, const QuadInt& a, const QuadInt& b,
                               const QuadInt& c, const QuadInt& d, const QuadInt& q) {
  const QuadInt one = QuadInt::one(a.d());
  const QuadInt& p = level.level;
  return {{a * p + one, b * p, c * p, d * p + one}, {a, b, c, d}, q};
}

}  // namespace

CongruenceLevel CongruenceLevel::make(const QuadInt& pi, unsigned n) {
  if (n == 0) throw std::invalid_argument("CongruenceLevel: n must be positive");
  if (pi.is_zero()) throw std::invalid_argument("CongruenceLevel: pi must be nonzero");
  return {pi, n, pow(pi, n), boost::multiprecision::pow(pi.norm(), n)};
}

double CongruenceLevel::modulus() const {
  return std::pow(pi.norm().convert_to<double>(), n / 2.0);
}

bool QuadMatrix::is_plus_minus_identity() const {
  const auto dd = a.d();
  if (!b.is_zero() || !c.is_zero()) return false;
  const QuadInt one = QuadInt::one(dd);
  return (a == one && d == one) || (a == -one && d == -one);
}

QuadMatrix QuadMatrix::canonical_sign() const {
  for (const QuadInt* e : {&a, &b, &c, &d}) {
    if (!e->is_zero()) return canonical_positive(*e) ? *this : -*this;
  }
  return *this;
}

bool operator<(const QuadMatrix& x, const QuadMatrix& y) {
  if (!(x.a == y.a)) return x.a < y.a;
  if (!(x.b == y.b)) return x.b < y.b;
  if (!(x.c == y.c)) return x.c < y.c;
  return x.d < y.d;
}

ElementClass classify(const QuadMatrix& m) {
  if (m.is_plus_minus_identity()) return ElementClass::Identity;
  const QuadInt t = m.trace();
  if (!t.is_rational()) return ElementClass::Loxodromic;
  const BigInt r = abs(t.a());
  if (r == 2) return ElementClass::Parabolic;
  return r < 2 ? ElementClass::Elliptic : ElementClass::Loxodromic;
}

std::optional<QuadInt> split_prime(std::int64_t p, std::int64_t d) {
  if (!is_prime(p)) throw std::invalid_argument("split_prime: p = " + std::to_string(p) + " is not prime");
  if (!is_squarefree(d)) throw std::invalid_argument("split_prime: d must be positive squarefree");
  for (std::int64_t a = 0; a * a <= p; ++a) {
    const std::int64_t rest = p - a * a;
    if (rest <= 0 || rest % d != 0) continue;
    const std::int64_t b2 = rest / d;
    auto b = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(b2))));
    while (b * b > b2) --b;
    while ((b + 1) * (b + 1) <= b2) ++b;
    if (b >= 1 && b * b == b2) return QuadInt(a, b, d);
  }
  return std::nullopt;
}

BigInt newman_index(const CongruenceLevel& level) {
  const BigInt np = level.pi.norm();
  if (np > BigInt(std::numeric_limits<std::int64_t>::max()) ||
      !is_prime(np.convert_to<std::int64_t>()) || np % 2 == 0) {
    throw DomainError("newman_index: N(pi) must be an odd prime");
  }
  const BigInt num = boost::multiprecision::pow(level.norm, 3) * (np * np - 1);
  const BigInt den = 2 * np * np;
  if (num % den != 0) throw DomainError("newman_index: index formula is not integral");
  return num / den;
}

double volume_of_level(const CongruenceLevel& level, double base_covolume) {
  if (!(base_covolume > 0)) throw DomainError("volume_of_level: base covolume must be positive");
  return base_covolume * newman_index(level).convert_to<double>();
}

BigInt min_loxodromic_trace_lower_bound(const CongruenceLevel& level) {
  return level.norm > 2 ? BigInt(level.norm - 2) : BigInt(0);
}

bool trace_in_congruence_class(const QuadInt& trace, const CongruenceLevel& level) {
  const QuadInt two(2, 0, trace.d());
  return divides(level.level * level.level, trace - two);
}

std::vector<CongruenceElement> enumerate_congruence_elements(const CongruenceLevel& level,
                                                             unsigned height, unsigned jobs) {
  const std::int64_t dd = level.pi.d();
  const auto box = box_elements(dd, height);
  const BigInt h = height;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(box.size())));

  // a + d = q·πⁿ and bc = ad + q: walk (a, d), then solve for c given b.
  auto worker = [&](std::size_t first, std::size_t stride, std::vector<CongruenceElement>& out) {
    for (std::size_t i = first; i < box.size(); i += stride) {
      const QuadInt& a = box[i];
      for (const QuadInt& d : box) {
        const auto q = exact_div(a + d, level.level);
        if (!q) continue;
        const QuadInt target = a * d + *q;
        for (const QuadInt& b : box) {
          if (b.is_zero()) {
            if (!target.is_zero()) continue;
            for (const QuadInt& c : box) out.push_back(make_element(level, a, b, c, d, *q));
            continue;
          }
          const auto c = exact_div(target, b);
          if (c && in_box(*c, h)) out.push_back(make_element(level, a, b, *c, d, *q));
        }
      }
    }
  };

  std::vector<std::vector<CongruenceElement>> parts(jobs);
  if (jobs == 1) {
    worker(0, 1, parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker, j, jobs, std::ref(parts[j]));
    for (auto& t : threads) t.join();
  }

  // Keyed by sign class; each element keeps its representative ≡ I mod πⁿ.
  // The two signs only collide when πⁿ | 2; the smaller matrix then wins.
  std::map<QuadMatrix, CongruenceElement> unique;
  for (auto& part : parts) {
    for (auto& e : part) {
      QuadMatrix key = e.matrix.canonical_sign();
      auto [it, inserted] = unique.try_emplace(std::move(key), e);
      if (!inserted && e.matrix < it->second.matrix) it->second = std::move(e);
    }
  }
  std::vector<CongruenceElement> out;
  out.reserve(unique.size());
  for (auto& [key, e] : unique) out.push_back(std::move(e));
  return out;
}

std::vector<GrowthRow> systole_growth_table(const QuadInt& pi, unsigned n_max,
                                            double base_covolume) {
  if (n_max == 0) throw std::invalid_argument("systole_growth_table: n_max must be positive");
  const double log_norm = std::log(pi.norm().convert_to<double>());
  std::vector<GrowthRow> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto level = CongruenceLevel::make(pi, n);
    GrowthRow row;
    row.n = n;
    row.index = newman_index(level);
    row.volume = base_covolume * row.index.convert_to<double>();
    row.trace_lb = min_loxodromic_trace_lower_bound(level);
    const long double r = std::max<long double>(1.0L, row.trace_lb.convert_to<long double>());
    row.systole_lb = static_cast<double>(2.0L * std::log(r) - std::log(4.0L));
    row.ratio = row.systole_lb / std::log(row.volume);
    row.uncorrected_systole_lb = 2.0 * n * log_norm - std::log(4.0);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<QuadInt> count_bounded_ideal_elements(std::int64_t d, double bound) {
  if (!(bound >= 1)) throw DomainError("count_bounded_ideal_elements: bound must be at least 1");
  if (!is_squarefree(d)) throw std::invalid_argument("count_bounded_ideal_elements: bad d");
  const long double b2 = static_cast<long double>(bound) * bound;
  const auto amax = static_cast<std::int64_t>(std::floor(bound));
  const auto bmax = static_cast<std::int64_t>(std::floor(bound / std::sqrt(static_cast<double>(d))));
  std::vector<QuadInt> out;
  for (std::int64_t a = -amax; a <= amax; ++a) {
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      const long double n = static_cast<long double>(a) * a + static_cast<long double>(d) * b * b;
      if (n > 0 && n <= b2) out.emplace_back(a, b, d);
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadInt& x, const QuadInt& y) {
    const BigInt nx = x.norm(), ny = y.norm();
    if (nx != ny) return nx < ny;
    return x < y;
  });
  return out;
}

}  // namespace systole
