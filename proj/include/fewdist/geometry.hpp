#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "fewdist/rational.hpp"

namespace fewdist {

using Point = std::vector<Rational>;

/// Finite nonempty set of pairwise distinct points with rational
/// coordinates in a fixed dimension d >= 1. Point order is part of the
/// value: matrices built over the set are indexed by it.
class PointSet {
public:
  /// Validates the invariants; throws DimensionMismatchError,
  /// DuplicatePointsError or BadParamsError.
  PointSet(std::size_t dimension, std::vector<Point> points);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  /// Subset in index order; indices must be valid and nonempty.
  PointSet subset(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

private:
  std::size_t dimension_;
  std::vector<Point> points_;
};

/// ||a - b||^2, exact. Throws DimensionMismatchError.
Rational squared_distance(const Point& a, const Point& b);

/// The strictly increasing set of positive squared distances a point set
/// realizes. Distances are stored squared so everything stays rational;
/// the spectrum size is the "s" of an s-distance set.
class DistanceSpectrum {
public:
  DistanceSpectrum() = default;
  explicit DistanceSpectrum(const std::set<Rational>& values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<Rational>& values() const { return values_; }
  bool contains(const Rational& v) const;

  friend bool operator==(const DistanceSpectrum&,
                         const DistanceSpectrum&) = default;

private:
  std::vector<Rational> values_;  // ascending, distinct, all positive
};

/// Spectrum over all unordered pairs; a singleton set has the empty
/// spectrum (s = 0). Throws DuplicatePointsError if any pair coincides.
DistanceSpectrum distance_spectrum(const PointSet& a);

/// C(d+s, s): the maximum size of an s-distance set in dimension d.
Int bbs_bound(std::size_t d, std::size_t s);

}  // namespace fewdist
