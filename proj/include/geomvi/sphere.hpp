#pragma once

#include <stdexcept>

#include "geomvi/grid.hpp"

namespace geomvi {

/// Raised when a geodesic step would leave the positive orthant. The
/// optimizer catches this and shrinks its step size instead of clamping.
class StepTooLarge : public std::runtime_error {
 public:
  explicit StepTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/**
 * A square-root density: a nonnegative GridFn psi with unit L2 norm,
 * i.e. a point on the positive orthant of the unit Hilbert sphere.
 */
class Srd {
 public:
  /// psi <- sqrt(p) after renormalizing p exactly. Requires p >= 0 and
  /// integral within 1e-3 of one.
  static Srd from_pdf(const GridFn& pdf);

  /// Validates the unit-norm and nonnegativity invariants (values in
  /// [-1e-8, 0) are clamped to zero as floating-point dust).
  static Srd from_psi(GridFn psi);

  /// The SRD of the uniform density on [0,1]: psi == 1.
  static Srd uniform(std::size_t m);

  const GridFn& psi() const { return psi_; }
  /// Pointwise square, the density this SRD represents.
  GridFn pdf() const;
  std::size_t size() const { return psi_.size(); }

 private:
  struct Unchecked {};
  Srd(GridFn psi, Unchecked) : psi_(std::move(psi)) {}
  GridFn psi_;

  friend Srd exp_map(const Srd&, const struct TangentVec&);
};

/// A tangent vector v at the footpoint `at`: <v, at.psi> = 0.
struct TangentVec {
  Srd at;
  GridFn v;

  double norm() const { return l2_norm(v); }
};

/// Fisher-Rao geodesic distance acos(<psi1, psi2>), in [0, pi/2] on the
/// positive orthant. The inner product is clamped to [-1,1] before acos.
double geodesic_distance(const Srd& psi1, const Srd& psi2);

/**
 * Exponential map cos(|v|) psi + sin(|v|) v/|v|, renormalized after
 * evaluation. |v| = 0 returns the footpoint. Throws StepTooLarge when the
 * result dips below -1e-8 anywhere (the step left the positive orthant).
 */
Srd exp_map(const Srd& psi, const TangentVec& v);

/// Inverse exponential map (u/sin u)(psi2 - cos(u) psi1), u = d(psi1,psi2).
TangentVec inv_exp_map(const Srd& psi1, const Srd& psi2);

/**
 * Parallel transport of v from psi1 to psi2 along the connecting geodesic:
 *   v - [2 <v, psi2> / |psi1 + psi2|^2] (psi1 + psi2).
 * An isometry; the result is tangent at psi2.
 */
TangentVec parallel_transport(const TangentVec& v, const Srd& psi1, const Srd& psi2);

/// Hellinger distance sqrt(1 - int sqrt(p q)) between two densities on the
/// same grid.
double hellinger(const GridFn& p, const GridFn& q);

}  // namespace geomvi
