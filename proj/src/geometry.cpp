#include "fewdist/geometry.hpp"

#include <algorithm>

#include "fewdist/errors.hpp"

namespace fewdist {

PointSet::PointSet(std::size_t dimension, std::vector<Point> points)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension_ == 0) throw BadParamsError("dimension must be at least 1");
  if (points_.empty()) throw BadParamsError("point set must be nonempty");
  for (const Point& p : points_) {
    if (p.size() != dimension_) {
      throw DimensionMismatchError("point has wrong number of coordinates");
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw DuplicatePointsError("duplicate points at indices " +
                                   std::to_string(i) + " and " +
                                   std::to_string(j));
      }
    }
  }
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (std::size_t i : indices) pts.push_back(points_.at(i));
  return PointSet(dimension_, std::move(pts));
}

Rational squared_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatchError("points of different dimension");
  }
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

DistanceSpectrum::DistanceSpectrum(const std::set<Rational>& values)
    : values_(values.begin(), values.end()) {
  for (const Rational& v : values_) {
    if (v.sign() <= 0) {
      throw BadParamsError("squared distances must be positive");
    }
  }
}

bool DistanceSpectrum::contains(const Rational& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

DistanceSpectrum distance_spectrum(const PointSet& a) {
  std::set<Rational> values;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Rational d = squared_distance(a[i], a[j]);
      if (d.is_zero()) {
        throw DuplicatePointsError("pair at squared distance zero");
      }
      values.insert(d);
    }
  }
  return DistanceSpectrum(values);
}

Int bbs_bound(std::size_t d, std::size_t s) {
  if (d == 0) throw BadParamsError("dimension must be at least 1");
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(d + s),
               static_cast<unsigned long>(s));
  return out;
}

}  // namespace fewdist
