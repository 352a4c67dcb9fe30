#include "fewdist/generators.hpp"

#include "fewdist/errors.hpp"

namespace fewdist {

PointSet simplex_standard(std::size_t n) {
  if (n < 2) throw BadParamsError("simplex needs n >= 2");
  std::vector<Point> pts(n, Point(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) pts[i][i] = Rational(1);
  return PointSet(n, std::move(pts));
}

PointSet cross_polytope(std::size_t d) {
  if (d < 2) throw BadParamsError("cross polytope needs d >= 2");
  std::vector<Point> pts;
  pts.reserve(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    Point plus(d, Rational(0)), minus(d, Rational(0));
    plus[i] = Rational(1);
    minus[i] = Rational(-1);
    pts.push_back(std::move(plus));
    pts.push_back(std::move(minus));
  }
  return PointSet(d, std::move(pts));
}

PointSet johnson(std::size_t n, std::size_t k) {
  if (k < 1 || n <= k) throw BadParamsError("johnson needs n > k >= 1");
  std::vector<Point> pts;
  // k-subsets of {0..n-1} in lexicographic order.
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    Point p(n, Rational(0));
    for (std::size_t i : c) p[i] = Rational(1);
    pts.push_back(std::move(p));
    std::size_t i = k;
    bool advanced = false;
    while (i-- > 0) {
      if (c[i] + (k - i) < n) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return PointSet(n, std::move(pts));
}

PointSet hypercube(std::size_t d) {
  if (d < 1) throw BadParamsError("hypercube needs d >= 1");
  if (d > 24) throw BadParamsError("hypercube of dimension above 24 refused");
  const std::size_t count = std::size_t{1} << d;
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Point p(d);
    for (std::size_t i = 0; i < d; ++i) {
      p[i] = Rational((mask >> i) & 1 ? 1 : 0);
    }
    pts.push_back(std::move(p));
  }
  return PointSet(d, std::move(pts));
}

}  // namespace fewdist
