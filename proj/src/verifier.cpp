#include "systole/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "systole/bounds.hpp"
#include "systole/constants.hpp"
#include "systole/cusp_lattice.hpp"
#include "systole/moebius.hpp"

namespace systole {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2 * std::numbers::pi;

/// Running minimum; ties keep the earliest point so reductions are order-stable.
struct Worst {
  double margin = kInf;
  std::vector<double> point;
  std::size_t count = 0;

  void offer(double m, std::vector<double> p) {
    ++count;
    if (m < margin || (std::isnan(m) && !std::isnan(margin))) {
      margin = m;
      point = std::move(p);
    }
  }
  void merge(const Worst& o) {
    count += o.count;
    if (o.margin < margin) {
      margin = o.margin;
      point = o.point;
    }
  }
};

CertificateReport finish(std::string id, const Worst& w) {
  CertificateReport r;
  r.claim_id = std::move(id);
  r.worst_margin = w.margin;
  r.worst_point = w.point;
  r.points_checked = w.count;
  r.status = w.margin >= 0 ? CertificateStatus::Pass : CertificateStatus::Fail;
  return r;
}

/// Evaluate `per_point(i, worst, sample)` over [0, n) in contiguous chunks, one per
/// worker, then reduce in index order. Each worker writes only its own slots.
template <typename Fn>
Worst parallel_sweep(std::size_t n, unsigned jobs, std::vector<MarginSample>* margins, Fn per_point) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<Worst> partial(jobs);
  std::vector<MarginSample> samples(margins ? n : 0);
  auto run = [&](unsigned j) {
    const std::size_t begin = n * j / jobs;
    const std::size_t end = n * (j + 1) / jobs;
    for (std::size_t i = begin; i < end; ++i) {
      Worst local;
      per_point(i, local);
      if (margins) samples[i] = {local.point, local.margin};
      partial[j].merge(local);
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(run, j);
    for (auto& t : threads) t.join();
  }
  Worst total;
  for (const auto& p : partial) total.merge(p);
  if (margins) margins->insert(margins->end(), samples.begin(), samples.end());
  return total;
}

}  // namespace

void GridSpec::validate() const {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("GridSpec: need finite lo <= hi");
  }
  if (points == 0) throw std::invalid_argument("GridSpec: need at least one point");
  if (points == 1 ? lo != hi : !(lo < hi)) {
    throw std::invalid_argument("GridSpec: need lo < hi and points >= 2");
  }
  if (scale == GridScale::Logarithmic && !(lo > 0)) {
    throw std::invalid_argument("GridSpec: logarithmic grid needs lo > 0");
  }
}

GridSpec GridSpec::single(double x) { return {x, x, 1, GridScale::Linear}; }

std::vector<double> GridSpec::values() const {
  validate();
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  const double steps = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / steps;
    out[i] = scale == GridScale::Linear ? lo + s * (hi - lo)
                                        : std::exp(std::log(lo) + s * (std::log(hi) - std::log(lo)));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::optional<double> bisect_root(const std::function<double(double)>& f, double lo, double hi,
                                  int max_iter) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if (!(std::signbit(flo) != std::signbit(fhi)) || std::isnan(flo) || std::isnan(fhi)) {
    return std::nullopt;
  }
  for (int i = 0; i < max_iter; ++i) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

CertificateReport certify_techlem2(const GridSpec& vc_grid, const Techlem2Options& options) {
  const auto vcs = vc_grid.values();
  // The realizable regime starts at √3·π² ≈ 17.0947; accept the rounded 17.094.
  const double floor_vc = min_cusp_volume_for_long_waist<double>() * (1 - 1e-4);
  if (!options.probe && vcs.front() < floor_vc) {
    throw std::invalid_argument("certify_techlem2: Vc grid starts below the realizable regime");
  }
  if (options.ell_points == 0) throw std::invalid_argument("certify_techlem2: ell_points must be positive");
  const auto bound = options.bound ? options.bound : [](double vc) { return techlem2_bound(vc); };

  auto per_vc = [&](std::size_t i, Worst& w) {
    const double vc = vcs[i];
    const double b = bound(vc);
    const double ell_hi = std::max(kTwoPi, max_waist_for_cusp_volume(vc));
    const std::size_t n = ell_hi > kTwoPi ? options.ell_points : 1;
    for (std::size_t k = 0; k < n; ++k) {
      const double ell = n == 1 ? kTwoPi
                                : (k + 1 == n ? ell_hi
                                              : kTwoPi + (ell_hi - kTwoPi) * static_cast<double>(k) /
                                                             static_cast<double>(n - 1));
      w.offer(b - s_of_ell(ell, vc), {vc, ell});
    }
  };
  const Worst total = parallel_sweep(vcs.size(), options.jobs, options.margins, per_vc);
  return finish("techlem2", total);
}

CertificateReport certify_crossing(const GridSpec& v_grid, const CrossingOptions& options) {
  const auto vs = v_grid.values();
  if (!(vs.front() > 0)) throw std::invalid_argument("certify_crossing: V must be positive");

  auto per_v = [&](std::size_t i, Worst& w) {
    const double v = vs[i];
    const double closed = crossing_volume(v);
    auto g = [v](double x) { return f1(x) - f2(x, v); };

    double lo = v * (1 + 1e-6);
    while (g(lo) >= 0 && lo > v * (1 + 1e-15)) lo = v + (lo - v) / 16;
    double hi = 2 * v + 1;
    for (int k = 0; k < 2000 && g(hi) <= 0; ++k) hi *= 2;
    const auto root = bisect_root(g, lo, hi);
    if (!root) {
      w.offer(-kInf, {v, lo, hi});
      return;
    }
    const double rel = std::abs(*root - closed) / closed;
    w.offer(options.tolerance - rel, {v, *root});

    // F₁ increasing, F₂ decreasing: relative step differences on a log grid.
    const GridSpec audit{v * (1 + 1e-6), 100 * closed, options.monotonicity_points, GridScale::Logarithmic};
    const auto xs = audit.values();
    double p1 = f1(xs[0]);
    double p2 = f2(xs[0], v);
    for (std::size_t k = 1; k < xs.size(); ++k) {
      const double c1 = f1(xs[k]);
      const double c2 = f2(xs[k], v);
      w.offer((c1 - p1) / c1, {v, xs[k]});
      w.offer((p2 - c2) / p2, {v, xs[k]});
      p1 = c1;
      p2 = c2;
    }
  };
  const Worst total = parallel_sweep(vs.size(), options.jobs, options.margins, per_v);
  return finish("crossing", total);
}

CertificateReport certify_length_lemma(const LengthLemmaOptions& options) {
  using Complex = std::complex<double>;
  if (!(options.r_max >= 0)) throw std::invalid_argument("certify_length_lemma: r_max must be >= 0");
  const double tau = options.tolerance;
  Worst w;

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  auto random_conjugator = [&] {
    for (;;) {
      const Complex a(coord(rng), coord(rng)), b(coord(rng), coord(rng));
      const Complex c(coord(rng), coord(rng)), d(coord(rng), coord(rng));
      if (std::abs(a * d - b * c) > 0.25) return Moebius(a, b, c, d);
    }
  };
  auto conjugated = [&](const Complex& t) {
    const Moebius h = random_conjugator();
    return h * Moebius::with_trace(t) * h.inverse();
  };

  for (std::size_t i = 0; i < options.samples; ++i) {
    const double r = options.r_max * unit(rng);
    const double theta = 2 * std::numbers::pi * unit(rng);
    const Moebius g = conjugated(std::polar(r, theta));
    if (classify(g) != ElementClass::Loxodromic) continue;
    const double modulus = std::abs(trace(g));
    const double bound = std::min(loxodromic_length_bound(modulus), loxodromic_length_bound(options.r_max));
    const Complex t = trace(g);
    w.offer(bound + tau - translation_length(g), {t.real(), t.imag()});
  }

  // Equality case: purely imaginary traces. Taken unconjugated, since the
  // eigen solver on a random non-normal conjugate loses about 1e-9 here.
  const double r_top = std::min(100.0, options.r_max);
  for (int k = 1; 0.1 * k <= r_top + 1e-12; ++k) {
    const double r = 0.1 * k;
    const Moebius g = Moebius::with_trace(Complex(0, r));
    const double expected = (r + std::sqrt(r * r + 4)) / 2;
    w.offer(tau - std::abs(max_eigenvalue_modulus(g) - expected), {0.0, r});
  }

  // Worst case of a slope of length 2π: trace 2 + 4π²i.
  const Complex pinned(2, kTwoPi * kTwoPi);
  if (std::abs(pinned) <= options.r_max) {
    const Moebius g = conjugated(pinned);
    const double len = translation_length(g);
    const double lemma = loxodromic_length_bound(ar_trace_bound(kTwoPi)) + tau - len;
    const double constant = 1e-5 - std::abs(len - 7.35534);
    w.offer(std::min(lemma, constant), {pinned.real(), pinned.imag()});
  }

  auto report = finish("length-lemma", w);
  report.seed = options.seed;
  if (options.margins) options.margins->push_back({report.worst_point, report.worst_margin});
  return report;
}

CertificateReport certify_cubic_claims(const GridSpec& vc_grid, const CubicOptions& options) {
  const auto vcs = vc_grid.values();
  const double tau = options.tolerance;
  const double sqrt2 = std::numbers::sqrt2;
  const double sqrt3 = std::numbers::sqrt3;
  Worst w;

  // f′(x) = 12x² − 2x + 16 on a wide symmetric grid.
  const GridSpec xs{-options.derivative_range, options.derivative_range, options.derivative_points};
  for (double x : xs.values()) {
    w.offer((12 * x * x - 2 * x + 16) / (12 * x * x + 16), {x});
  }
  // Discriminants: 4 − 4·12·16 for f′, 2 − 64(8 − 2√2) for the claim quadratic.
  const double disc_fprime = 4.0 - 4.0 * 12.0 * 16.0;
  const double disc_claim = 2.0 - 64.0 * (8.0 - 2.0 * sqrt2);
  w.offer(-disc_fprime / 768.0, {0.0});
  w.offer(-disc_claim / (64.0 * (8.0 - 2.0 * sqrt2)), {0.0});

  for (double vc : vcs) {
    const double vc2 = vc * vc;
    const double vc23 = std::cbrt(vc2);
    const double vc43 = vc23 * vc23;
    auto f = [vc2](double x) { return 4 * x * x * x - x * x + 16 * x - 4 * vc2; };
    auto a = [](double x) { return 4 * x * x + 16; };
    auto t = [vc2](double x) { return x + 4 * vc2 / x; };

    const double x1 = sqrt2 * vc23;
    w.offer(f(x1) / (4 * x1 * x1 * x1 + 16 * x1 + 4 * vc2), {vc, x1});

    const auto x0 = bisect_root(f, 0.0, x1);
    if (!x0) {
      w.offer(-kInf, {vc, x1});
    } else {
      w.offer((a(x1) - a(*x0)) / a(x1), {vc, *x0});
    }

    const double x_end = 4 * vc / sqrt3;
    const double seven = 7 * vc / sqrt3;
    w.offer(tau - std::abs(t(x_end) - seven) / seven, {vc, x_end});
    const double rhs = 8 * vc43 + 16;
    w.offer((rhs - seven) / rhs, {vc, x_end});
  }
  return finish("cubic", w);
}

}  // namespace systole
