#pragma once

#include <cstddef>

namespace sclab {

enum class GridKind { LineSegment, Circle, TorusLattice };

// Uniform sample grid.  Line segments include x_min and exclude x_max;
// circle and torus lattices sample x_j = 2*pi*j/N on [0, 2*pi).  Spectral
// kinds (line, circle) require a power-of-two sample count so transforms
// stay radix-2.
class Grid {
 public:
  static Grid line(double x_min, double x_max, std::size_t n);
  static Grid circle(std::size_t n);
  static Grid torus(std::size_t n);

  GridKind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double length() const { return x_max_ - x_min_; }
  double dx() const { return length() / static_cast<double>(n_); }
  double x(std::size_t j) const {
    return x_min_ + dx() * static_cast<double>(j);
  }

  bool operator==(const Grid&) const = default;

 private:
  Grid(GridKind k, double a, double b, std::size_t n)
      : kind_(k), n_(n), x_min_(a), x_max_(b) {}

  GridKind kind_;
  std::size_t n_;
  double x_min_;
  double x_max_;
};

}  // namespace sclab
