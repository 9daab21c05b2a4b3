// Acceptance checks. Each criterion prints its sub-checks and one verdict line:
//   criterion N: PASS|FAIL  <summary>
// Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "systole/bianchi.hpp"
#include "systole/bounds.hpp"
#include "systole/constants.hpp"
#include "systole/moebius.hpp"
#include "systole/verifier.hpp"

using namespace systole;

namespace {

constexpr double kPi = std::numbers::pi;

class Criterion {
 public:
  explicit Criterion(int id) : id_(id), start_(std::chrono::steady_clock::now()) {}

  // A sub-check that counts towards the verdict.
  void check(bool ok, const std::string& what) {
    std::printf("  [%s] %s\n", ok ? "ok" : "FAILED", what.c_str());
    ok_ = ok_ && ok;
  }

  // Diagnostic output that does not affect the verdict.
  void note(const std::string& what) { std::printf("  [info] %s\n", what.c_str()); }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void runtime_below(double limit_seconds) {
    const double t = elapsed_seconds();
    check(t < limit_seconds, fmt("runtime %.4g s < %.4g s", t, limit_seconds));
  }

  bool finish(const std::string& summary) const {
    std::printf("criterion %d: %s  %s\n", id_, ok_ ? "PASS" : "FAIL", summary.c_str());
    std::fflush(stdout);
    return ok_;
  }

  template <typename... Args>
  static std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
  }

 private:
  int id_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_;
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

bool criterion_1() {
  Criterion c(1);
  const double v = ar_length_bound(2 * kPi);
  c.runtime_below(1e-3);
  c.check(std::abs(v - 7.35534) < 1e-5, Criterion::fmt("ar_length_bound(2*pi) = %.10f, |diff| < 1e-5", v));
  return c.finish("Adams-Reid constant 7.35534");
}

bool criterion_2() {
  Criterion c(2);
  const double link = link_systole_bound(0.0);
  const double ar = ar_length_bound(2 * kPi);
  c.runtime_below(1e-3);
  c.check(std::abs(link - 7.35663) < 1e-4, Criterion::fmt("link_systole_bound(0) = %.10f, |diff| < 1e-4", link));
  c.check(link > ar, Criterion::fmt("exceeds ar_length_bound(2*pi) by %.3e", link - ar));
  return c.finish("link-bound constant 7.35663");
}

bool criterion_3() {
  Criterion c(3);
  const double v0 = 3 * lobachevsky(kPi / 3);
  const double c0 = cusp_density_constant();
  const double derived = std::sqrt(3.0) / (2 * v0);
  c.note(Criterion::fmt("V0 = 3*Lambda(pi/3) = %.17g", v0));
  c.check(c0 > 0.8528 && c0 < 0.8536, Criterion::fmt("C0 = %.15f in (0.8528, 0.8536)", c0));
  c.check(std::abs(c0 - derived) < 1e-12, Criterion::fmt("|C0 - sqrt(3)/(2 V0)| = %.3e < 1e-12", std::abs(c0 - derived)));
  return c.finish("cusp-density constant ~0.853");
}

bool criterion_4() {
  Criterion c(4);
  LengthLemmaOptions opt;
  opt.samples = 100000;
  opt.r_max = 100;
  opt.seed = 42;
  opt.tolerance = 1e-9;
  const auto rep = certify_length_lemma(opt);
  c.check(rep.status == CertificateStatus::Pass,
          Criterion::fmt("library certificate: %zu elements, worst margin %.3e (seed 42)", rep.points_checked,
                         rep.worst_margin));

  // Sharpness family, independently of the certificate: larger root of
  // λ² − ri·λ + 1 from the quadratic formula against the eigen solver.
  double worst = 0;
  for (int k = 1; k <= 1000; ++k) {
    const double r = 0.1 * k;
    const std::complex<double> t(0, r);
    const std::complex<double> disc = std::sqrt(t * t - 4.0);
    const double root = std::max(std::abs((t + disc) / 2.0), std::abs((t - disc) / 2.0));
    const double expected = (r + std::sqrt(r * r + 4)) / 2;
    const double eig = max_eigenvalue_modulus(Moebius::with_trace(t));
    worst = std::max({worst, std::abs(eig - expected), std::abs(root - expected)});
  }
  c.check(worst < 1e-9, Criterion::fmt("sharpness r = 0.1..100: max | |lambda| - (r+sqrt(r^2+4))/2 | = %.3e", worst));
  c.runtime_below(5);
  return c.finish("length lemma on 1e5 seeded loxodromics plus sharpness family");
}

bool criterion_5() {
  Criterion c(5);
  const GridSpec grid{17.094, 1e6, 200, GridScale::Logarithmic};
  std::vector<MarginSample> margins;
  Techlem2Options opt;
  opt.ell_points = 10000;
  opt.jobs = worker_count();
  opt.margins = &margins;
  const auto rep = certify_techlem2(grid, opt);
  c.check(rep.worst_margin > 0,
          Criterion::fmt("sweep 200 x 1e4: worst margin %.6g at Vc = %.6g, ell = %.6g", rep.worst_margin,
                         rep.worst_point.at(0), rep.worst_point.at(1)));
  const double sweep_time = c.elapsed_seconds();

  double ratio = 0;
  double ratio_vc = 0;
  for (const auto& m : margins) {
    const double r = 1 - m.margin / techlem2_bound(m.point[0]);
    if (r > ratio) ratio = r, ratio_vc = m.point[0];
  }
  c.note(Criterion::fmt("largest S/bound on the grid is %.6f (Vc = %.6g)", ratio, ratio_vc));

  opt.margins = nullptr;
  opt.bound = [](double vc) { return 0.99 * techlem2_bound(vc); };
  const auto perturbed = certify_techlem2(grid, opt);
  c.check(perturbed.status == CertificateStatus::Fail,
          Criterion::fmt("perturbation x0.99 flips to fail (got %s, worst margin %.6g)",
                         perturbed.status == CertificateStatus::Fail ? "fail" : "pass", perturbed.worst_margin));

  opt.bound = [](double vc) { return 0.70 * techlem2_bound(vc); };
  const auto strong = certify_techlem2(grid, opt);
  c.note(Criterion::fmt("perturbation x0.70 gives %s (worst margin %.6g)",
                        strong.status == CertificateStatus::Fail ? "fail" : "pass", strong.worst_margin));
  c.check(sweep_time < 60, Criterion::fmt("sweep runtime %.4g s < 60 s", sweep_time));
  return c.finish("combined trace bound certification");
}

bool criterion_6() {
  Criterion c(6);
  const GridSpec grid{0.1, 1e6, 100, GridScale::Logarithmic};
  CrossingOptions opt;
  opt.tolerance = 1e-10;
  opt.jobs = worker_count();
  const auto rep = certify_crossing(grid, opt);
  c.check(rep.status == CertificateStatus::Pass,
          Criterion::fmt("bisection root matches X* to rel 1e-10 over 100 V (worst margin %.3e)", rep.worst_margin));

  double literal = 0, chained = 0;
  for (double v : grid.values()) {
    const double f = f1(crossing_volume(v));
    const double link = link_systole_bound(v);
    literal = std::max(literal, std::abs(std::log(f * f + 8) - link));
    chained = std::max(chained, std::abs(std::log(f * f + 4) - link));
  }
  c.check(literal < 1e-9, Criterion::fmt("max |log(F1(X*)^2 + 8) - link_systole_bound(V)| = %.3e < 1e-9", literal));
  c.note(Criterion::fmt("max |log(F1(X*)^2 + 4) - link_systole_bound(V)| = %.3e", chained));
  c.runtime_below(10);
  return c.finish("F1 = F2 crossing and link bound");
}

bool criterion_7() {
  Criterion c(7);
  for (double v : {1e6, 1e8, 1e10}) {
    const double slope = (cusped_systole_bound(10 * v) - cusped_systole_bound(v)) / std::log(10.0);
    c.check(slope >= 1.30 && slope <= 1.3334, Criterion::fmt("V = %.0e: slope %.8f in [1.30, 1.3334]", v, slope));
  }
  return c.finish("asymptotic slope 4/3");
}

bool criterion_8() {
  Criterion c(8);
  const QuadInt pi(3, 1, 2);
  c.check(pi.norm() == 11, "norm(3+sqrt(-2)) = " + pi.norm().str());
  const auto split = split_prime(11, 2);
  c.check(split && *split == pi, "split_prime(11, 2) = " + (split ? split->to_string() : std::string("none")));
  const BigInt i1 = newman_index(CongruenceLevel::make(pi, 1));
  c.check(i1 == 660, "newman_index(n = 1) = " + i1.str());
  BigInt prev = i1;
  bool ratios = true;
  for (unsigned n = 2; n <= 5; ++n) {
    const BigInt next = newman_index(CongruenceLevel::make(pi, n));
    ratios = ratios && next % prev == 0 && next / prev == 1331;
    prev = next;
  }
  c.check(ratios, "index ratio 1331 for n <= 5; index(5) = " + prev.str());
  c.runtime_below(1);
  return c.finish("exact Bianchi arithmetic");
}

bool criterion_9() {
  Criterion c(9);
  const QuadInt pi(3, 1, 2);
  const auto level = CongruenceLevel::make(pi, 1);
  const auto elems = enumerate_congruence_elements(level, 8, worker_count());
  std::size_t non_identity = 0, loxodromic = 0, bad_trace = 0, short_lox = 0;
  std::optional<BigInt> min_norm;
  const QuadInt two(2, 0, 2);
  const QuadInt pi2 = pi * pi;
  for (const auto& e : elems) {
    const QuadInt t = e.matrix.trace();
    if (!e.matrix.is_plus_minus_identity()) ++non_identity;
    if (!divides(pi2, t - two)) ++bad_trace;
    if (classify(e.matrix) == ElementClass::Loxodromic) {
      ++loxodromic;
      const BigInt n = t.norm();
      if (n < 81) ++short_lox;
      if (!min_norm || n < *min_norm) min_norm = n;
    }
  }
  c.check(non_identity > 0, Criterion::fmt("height 8: %zu elements, %zu besides the identity", elems.size(), non_identity));
  c.check(bad_trace == 0, Criterion::fmt("trace - 2 in (pi^2) for all elements (%zu violations)", bad_trace));
  c.check(short_lox == 0, Criterion::fmt("%zu loxodromics, all with |trace| >= 9 (%zu violations)", loxodromic, short_lox));
  if (min_norm) c.note("smallest loxodromic |trace|^2 = " + min_norm->str());
  const double enum_time = c.elapsed_seconds();

  const auto rows = systole_growth_table(pi, 10, double(kBianchiCovolumeD2));
  const double ratio = rows.back().ratio;
  c.check(ratio > 0.60 && ratio < 0.6667, Criterion::fmt("census n = 10: l_n / log V_n = %.6f in (0.60, 0.6667)", ratio));
  c.check(enum_time < 120, Criterion::fmt("enumeration runtime %.4g s < 120 s", enum_time));
  return c.finish("congruence trace oracle and census");
}

bool criterion_10(const std::map<int, std::function<bool()>>& others) {
  Criterion c(10);
  // A scope statement: the verdict is that every reproduction criterion
  // above runs to a verdict. Their own pass/fail is reported separately.
  int ran = 0, passed = 0;
  for (const auto& [id, fn] : others) {
    std::printf(" ---- criterion %d (as part of 10)\n", id);
    bool ok = false;
    try {
      ok = fn();
      ++ran;
    } catch (const std::exception& e) {
      std::printf("  criterion %d threw: %s\n", id, e.what());
    }
    passed += ok;
  }
  c.check(ran == int(others.size()), Criterion::fmt("%d of %zu reproduction criteria ran to a verdict", ran, others.size()));
  c.note(Criterion::fmt("%d of %zu reproduction criteria passed", passed, others.size()));
  return c.finish("acceptance rests on criteria 1-9");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criterion number(s), 1-10 (default: all)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::map<int, std::function<bool()>> reproduction{
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4}, {5, criterion_5},
      {6, criterion_6}, {7, criterion_7}, {8, criterion_8}, {9, criterion_9}};
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

  bool all = true;
  for (int id : selected) {
    try {
      all = (id == 10 ? criterion_10(reproduction) : reproduction.at(id)()) && all;
    } catch (const std::exception& e) {
      std::printf("criterion %d: FAIL  exception: %s\n", id, e.what());
      all = false;
    }
  }
  return all ? 0 : 1;
}
