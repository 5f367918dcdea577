#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

namespace geomvi {

/**
 * A real-valued function on [0,1] sampled at the M uniform grid points
 * t_i = i/(M-1), i = 0..M-1. Instances are immutable values; all operations
 * return new objects. Two GridFns interoperate only when their grid sizes
 * match; a mismatch is an error, never a silent resample.
 */
class GridFn {
 public:
  GridFn() = default;
  explicit GridFn(std::vector<double> values);

  static GridFn zeros(std::size_t m);
  static GridFn constant(std::size_t m, double value);

  /// Sample f(t) at the M grid points.
  template <typename F>
  static GridFn sample(std::size_t m, F&& f) {
    std::vector<double> v(m);
    const double h = 1.0 / static_cast<double>(m - 1);
    for (std::size_t i = 0; i < m; ++i) v[i] = f(static_cast<double>(i) * h);
    return GridFn(std::move(v));
  }

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  /// Grid abscissa t_i.
  double t(std::size_t i) const {
    return static_cast<double>(i) / static_cast<double>(values_.size() - 1);
  }
  /// Grid spacing 1/(M-1).
  double step() const { return 1.0 / static_cast<double>(values_.size() - 1); }

  /// Pointwise transform, returns a new GridFn.
  template <typename F>
  GridFn map(F&& f) const {
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(values_[i]);
    return GridFn(std::move(v));
  }

 private:
  std::vector<double> values_;
};

/// The affine bijection [lo,hi] <-> [0,1] carrying a coordinate's support.
struct DomainMap {
  double lo = 0.0;
  double hi = 1.0;

  DomainMap() = default;
  DomainMap(double lo_, double hi_);

  double width() const { return hi - lo; }
  double to_native(double t) const { return lo + (hi - lo) * t; }
  double to_t(double x) const { return (x - lo) / (hi - lo); }
};

GridFn operator+(const GridFn& a, const GridFn& b);
GridFn operator-(const GridFn& a, const GridFn& b);
GridFn operator*(double c, const GridFn& f);
/// Pointwise product.
GridFn hadamard(const GridFn& a, const GridFn& b);

/// Trapezoidal approximation of the integral over [0,1].
double integrate(const GridFn& f);

/// L2 inner product under the trapezoid rule. Throws on size mismatch.
double inner(const GridFn& f, const GridFn& g);

double l2_norm(const GridFn& f);

/// Trapezoid weight of grid node i on an M-point grid.
inline double trapezoid_weight(std::size_t i, std::size_t m) {
  const double h = 1.0 / static_cast<double>(m - 1);
  return (i == 0 || i + 1 == m) ? 0.5 * h : h;
}

/**
 * Classical Gram-Schmidt with a second reorthogonalization pass.
 * Throws std::runtime_error naming the offending index when a residual norm
 * falls below 1e-12 (numerically dependent input).
 */
std::vector<GridFn> gram_schmidt(const std::vector<GridFn>& raw);

/**
 * Density change of variables onto [0,1]: f holds samples of a density on
 * [lo,hi]; the image picks up the Jacobian factor (hi-lo) so its integral
 * over [0,1] equals the native mass. from_unit inverts the map.
 */
GridFn to_unit(const GridFn& f, const DomainMap& map);
GridFn from_unit(const GridFn& f, const DomainMap& map);

/// CSV with header "t,value", one row per grid point, 17 significant digits.
void write_csv(std::ostream& os, const GridFn& f);
GridFn read_csv(std::istream& is);
void write_csv_file(const std::string& path, const GridFn& f);
GridFn read_csv_file(const std::string& path);

}  // namespace geomvi
