#pragma once

#include <cstddef>
#include <cstdint>

#include "eqlab/errors.hpp"

namespace eqlab {

inline constexpr double kPi = 3.14159265358979323846;

/// Uniform rectangular grid. Node (i,j) sits at (x0 + i*dx, y0 + j*dy);
/// values are stored row-major with the y index fastest: flat = i*ny + j.
struct Grid2D {
  std::size_t nx = 0, ny = 0;
  double x0 = 0.0, y0 = 0.0;
  double dx = 0.0, dy = 0.0;

  Grid2D() = default;
  Grid2D(std::size_t nx_, std::size_t ny_, double x0_, double y0_, double dx_,
         double dy_)
      : nx(nx_), ny(ny_), x0(x0_), y0(y0_), dx(dx_), dy(dy_) {
    if (nx < 8 || ny < 8) throw config_error("Grid2D: nx, ny must be >= 8");
    if (dx <= 0.0 || dy <= 0.0) throw config_error("Grid2D: dx, dy must be > 0");
  }

  /// Cell-centered grid over [xlo,xhi] x [ylo,yhi]: first node half a spacing
  /// inside each edge, so reflection symmetries of the box fall between nodes.
  static Grid2D cell_centered(std::size_t nx, std::size_t ny, double xlo,
                              double xhi, double ylo, double yhi) {
    const double dx = (xhi - xlo) / static_cast<double>(nx);
    const double dy = (yhi - ylo) / static_cast<double>(ny);
    return Grid2D(nx, ny, xlo + 0.5 * dx, ylo + 0.5 * dy, dx, dy);
  }

  std::size_t size() const { return nx * ny; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * ny + j; }
  double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
  double y(std::size_t j) const { return y0 + static_cast<double>(j) * dy; }
  double cell_area() const { return dx * dy; }

  /// Implied momentum-grid spacings for the unitary transform convention.
  double dkx() const { return 2.0 * kPi / (static_cast<double>(nx) * dx); }
  double dky() const { return 2.0 * kPi / (static_cast<double>(ny) * dy); }

  bool same_shape(const Grid2D& o) const { return nx == o.nx && ny == o.ny; }

  bool operator==(const Grid2D& o) const {
    return nx == o.nx && ny == o.ny && x0 == o.x0 && y0 == o.y0 && dx == o.dx &&
           dy == o.dy;
  }
};

/// Centered momentum grid matching `g`: k axes run monotonically from
/// -nx/2*dk to (nx/2-1)*dk. Used as the grid of to_momentum() output.
inline Grid2D momentum_grid(const Grid2D& g) {
  const double dkx = g.dkx(), dky = g.dky();
  return Grid2D(g.nx, g.ny, -static_cast<double>(g.nx / 2) * dkx,
                -static_cast<double>(g.ny / 2) * dky, dkx, dky);
}

}  // namespace eqlab
