#include "eqlab/models.hpp"

namespace eqlab {

double hh_potential(double x, double y, const HenonHeilesParams& p) {
  return 0.5 * p.U * (x * x + y * y) + p.lambda * (x * x * y - y * y * y / 3.0);
}

std::array<double, 2> hh_gradient(double x, double y, const HenonHeilesParams& p) {
  return {p.U * x + 2.0 * p.lambda * x * y,
          p.U * y + p.lambda * (x * x - y * y)};
}

HHCriticalPoints hh_critical_points(const HenonHeilesParams& p) {
  const double rc = p.r_c();
  const double s = std::sqrt(3.0) / 2.0 * rc;
  return {{0.0, 0.0}, {0.0, rc}, {-s, -0.5 * rc}, {s, -0.5 * rc}, p.V_c()};
}

double RippleBilliardParams::side_length() const {
  // arc length of x = b - a cos(pi y / b) over y in [0, 2b]
  const int n = 4096;  // Simpson, even count
  const double h = height() / n;
  const double c = a * kPi / b;
  auto f = [&](double y) {
    const double s = c * std::sin(kPi * y / b);
    return std::sqrt(1.0 + s * s);
  };
  double sum = f(0.0) + f(height());
  for (int i = 1; i < n; ++i) sum += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

bool billiard_contains(double x, double y, const RippleBilliardParams& p) {
  if (y < 0.0 || y > p.height()) return false;
  return std::abs(x) <= p.half_width(y);
}

double billiard_boundary_function(double x, double y,
                                  const RippleBilliardParams& p) {
  const double side = p.half_width(y) - std::abs(x);
  return std::min({side, y, p.height() - y});
}

std::array<double, 2> billiard_wall_normal(double x, double y,
                                           const RippleBilliardParams& p,
                                           double tol) {
  const double side = p.half_width(y) - std::abs(x);
  const double bottom = y;
  const double top = p.height() - y;

  const double closest = std::min({std::abs(side), std::abs(bottom), std::abs(top)});
  if (closest > tol)
    throw config_error("billiard_wall_normal: point is not on a wall");

  if (std::abs(bottom) <= std::abs(side) && std::abs(bottom) <= std::abs(top))
    return {0.0, -1.0};
  if (std::abs(top) <= std::abs(side)) return {0.0, 1.0};

  // Side wall: gradient of |x| - b + a cos(pi y / b).
  const double sx = x >= 0.0 ? 1.0 : -1.0;
  const double ny = -(p.a * kPi / p.b) * std::sin(kPi * y / p.b);
  const double len = std::sqrt(1.0 + ny * ny);
  return {sx / len, ny / len};
}

RealField hh_potential_field(const Grid2D& g, const HenonHeilesParams& p,
                             double box_half, double wall_height) {
  RealField V(g);
  for (std::size_t i = 0; i < g.nx; ++i) {
    const double x = g.x(i);
    for (std::size_t j = 0; j < g.ny; ++j) {
      const double y = g.y(j);
      if (std::abs(x) > box_half || std::abs(y) > box_half) {
        V.at(i, j) = wall_height;
      } else {
        V.at(i, j) = std::max(hh_potential(x, y, p), 0.0);
      }
    }
  }
  return V;
}

}  // namespace eqlab
