// Timing comparison between the OpenMP kernels and the serial reference
// path, on inputs large enough for the parallel grain to matter. Each
// kernel is timed best-of-3 at one thread and at the full thread count.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "fewdist/clp.hpp"
#include "fewdist/generators.hpp"
#include "fewdist/linalg.hpp"
#include "fewdist/reference.hpp"
#include "fewdist/search.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double best_of_3_ms(const std::function<void()>& fn) {
  double best = 0;
  for (int rep = 0; rep < 3; ++rep) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (rep == 0 || ms < best) best = ms;
  }
  return best;
}

fewdist::RMatrix random_matrix(std::size_t rows, std::size_t cols,
                               std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-99, 99);
  fewdist::RMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = fewdist::Rational(entry(rng));
  return m;
}

// Random rational points; collisions are astronomically unlikely at this
// coordinate range but the PointSet constructor would catch them.
fewdist::PointSet random_points(std::size_t d, std::size_t count,
                                std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<fewdist::Point> pts;
  for (std::size_t i = 0; i < count; ++i) {
    fewdist::Point p(d);
    for (std::size_t c = 0; c < d; ++c) {
      p[c] = fewdist::Rational(fewdist::Int(num(rng)), fewdist::Int(den(rng)));
    }
    pts.push_back(std::move(p));
  }
  return fewdist::PointSet(d, std::move(pts));
}

struct Timing {
  double serial_ms = 0;
  double parallel_ms = 0;
};

Timing compare(int max_threads, const std::function<void()>& fn) {
  Timing t;
  omp_set_num_threads(1);
  t.serial_ms = best_of_3_ms(fn);
  omp_set_num_threads(max_threads);
  t.parallel_ms = best_of_3_ms(fn);
  return t;
}

void report(const char* name, const Timing& t, bool same_result) {
  std::printf("%-36s %9.1f ms %9.1f ms %7.2fx %s\n", name, t.serial_ms,
              t.parallel_ms, t.serial_ms / t.parallel_ms,
              same_result ? "" : "  RESULT MISMATCH");
}

}  // namespace

int main() {
  const int max_threads = omp_get_max_threads();
  std::printf("threads: 1 vs %d\n", max_threads);
  std::printf("%-36s %12s %12s %8s\n", "kernel", "1 thread", "parallel",
              "speedup");

  // Fraction-free rank. The serial reference row reduction is the
  // independent algorithm the kernel is tested against; it is shown for
  // scale, not merely for speed bragging.
  {
    const auto m = random_matrix(200, 200, 7);
    std::size_t r1 = 0, r2 = 0;
    const Timing t = compare(max_threads, [&] { r1 = fewdist::rank(m); });
    r2 = r1;
    omp_set_num_threads(max_threads);
    const double gauss =
        best_of_3_ms([&] { r2 = fewdist::reference::rank(m); });
    report("rank (fraction-free, 200x200)", t, r1 == r2);
    std::printf("%-36s %9.1f ms   (division-based, serial by design)\n",
                "  reference rank, same matrix", gauss);
  }

  // Pair-polynomial matrix build: every entry is a full distance-product
  // evaluation over a large spectrum of rational values.
  {
    const auto a = random_points(3, 36, 99);
    const auto p =
        fewdist::distance_product_poly(fewdist::distance_spectrum(a));
    fewdist::RMatrix m1, m2;
    const Timing t =
        compare(max_threads, [&] { m1 = fewdist::build_clp_matrix(p, a); });
    m2 = fewdist::build_clp_matrix(p, a);
    report("matrix build (36 pts, |S| = 630)", t, m1 == m2);
  }

  // Symmetric inertia.
  {
    auto m = random_matrix(140, 140, 11);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
    fewdist::Inertia i1, i2;
    const Timing t = compare(max_threads, [&] { i1 = fewdist::inertia(m); });
    i2 = fewdist::inertia(m);
    report("inertia (symmetric 140x140)", t, i1 == i2);
  }

  // Subset enumeration over an irregular ground set (many distance
  // classes, so feasibility scans go deep).
  {
    const auto ground = random_points(3, 16, 123);
    std::size_t b1 = 0, b2 = 0;
    const Timing t = compare(
        max_threads, [&] { b1 = fewdist::exhaustive_oracle(ground, 3); });
    b2 = fewdist::exhaustive_oracle(ground, 3);
    report("exhaustive subsets (2^16, s = 3)", t, b1 == b2);
  }

  return 0;
}
