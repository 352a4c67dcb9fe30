#pragma once

#include "fewdist/geometry.hpp"

namespace fewdist {

/// {e_1, ..., e_n} in Q^n; one distance (squared spectrum {2}). n >= 2.
PointSet simplex_standard(std::size_t n);

/// {+-e_1, ..., +-e_d} in Q^d; 2d points, squared spectrum {2, 4}. d >= 2.
PointSet cross_polytope(std::size_t d);

/// Indicator vectors of all k-subsets of {1..n} in Q^n; C(n,k) points,
/// squared spectrum inside {2, 4, ..., 2k}. n > k >= 1.
PointSet johnson(std::size_t n, std::size_t k);

/// All 2^d points of {0,1}^d; squared spectrum {1, ..., d}. d >= 1.
PointSet hypercube(std::size_t d);

}  // namespace fewdist
