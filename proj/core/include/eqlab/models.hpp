#pragma once

#include <array>
#include <cmath>

#include "eqlab/field.hpp"

namespace eqlab {

// Units everywhere: m = 1/2, hbar = 1, so H = p^2 + V(x, y).

/// Henon-Heiles potential V = U/2 (x^2+y^2) + lambda (x^2 y - y^3/3) with the
/// derived critical quantities: saddle radius r_c = U/lambda, escape energy
/// V_c = U^3/(6 lambda^2), reference momentum p_0 = sqrt(2 m V_c).
struct HenonHeilesParams {
  double U = 1.0;
  double lambda = 0.05;

  double r_c() const { return U / lambda; }
  double V_c() const { return U * U * U / (6.0 * lambda * lambda); }
  double p_0() const { return std::sqrt(V_c()); }  // 2m = 1

  void validate() const {
    if (!(U > 0.0) || !(lambda > 0.0))
      throw config_error("HenonHeilesParams: U and lambda must be > 0");
  }
};

double hh_potential(double x, double y, const HenonHeilesParams& p);

/// (dV/dx, dV/dy).
std::array<double, 2> hh_gradient(double x, double y, const HenonHeilesParams& p);

struct HHCriticalPoints {
  std::array<double, 2> O, A, B, C;  // stable point and the three saddles
  double V_c;
};

/// O = (0,0); A = (0, r_c); B, C = (-+ sqrt(3)/2 r_c, -r_c/2). The gradient
/// vanishes at all four.
HHCriticalPoints hh_critical_points(const HenonHeilesParams& p);

/// Ripple billiard: hard walls at x = -+(b - a cos(pi y / b)) for y in
/// [0, 2b], straight walls at y = 0 and y = 2b. Fully chaotic at a=6, b=15.
struct RippleBilliardParams {
  double a = 6.0;
  double b = 15.0;

  double height() const { return 2.0 * b; }
  double half_width(double y) const { return b - a * std::cos(kPi * y / b); }
  double area() const { return 4.0 * b * b; }  // the cosine integrates to zero

  /// Wall arc length of one rippled side, by Simpson quadrature.
  double side_length() const;
  double perimeter() const { return 2.0 * side_length() + 4.0 * (b - a); }

  void validate() const {
    if (!(b > 0.0) || a < 0.0)
      throw config_error("RippleBilliardParams: need b > 0, a >= 0");
    if (!(a < b)) throw config_error("RippleBilliardParams: need a < b");
  }
};

bool billiard_contains(double x, double y, const RippleBilliardParams& p);

/// Outward unit normal at a wall point; the point must lie within `tol` of a
/// wall (default 1e-8 in wall-distance units) or a config_error is thrown.
std::array<double, 2> billiard_wall_normal(double x, double y,
                                           const RippleBilliardParams& p,
                                           double tol = 1e-8);

/// Signed "inside" margin: min of the distances to the y-walls and the
/// side-wall implicit function; positive strictly inside. Not a Euclidean
/// distance near the curved wall but vanishes exactly on it.
double billiard_boundary_function(double x, double y, const RippleBilliardParams& p);

/// Henon-Heiles potential sampled on a grid, with the confinement convention
/// used for propagation: the raw potential is clamped below at zero (the raw
/// surface dives to large negative values outside the saddle region, which
/// the spectral momentum grid cannot represent), and a tall step of height
/// `wall_height` stands outside |x|, |y| > box_half. Inside the physical
/// landscape (V >= 0, within the box) it is the exact polynomial.
RealField hh_potential_field(const Grid2D& g, const HenonHeilesParams& p,
                             double box_half, double wall_height);

}  // namespace eqlab
