#include "eqlab/packet.hpp"

#include <cmath>

namespace eqlab {

ComplexField make_gaussian_packet(
    const GaussianPacket& pk, const Grid2D& grid,
    const std::function<bool(double, double)>& inside) {
  if (!(pk.alpha > 0.0)) throw config_error("gaussian packet: alpha must be > 0");

  // Support = disc of radius 5/alpha around the center. It must fit in the
  // grid and, when a domain predicate is given, inside the domain.
  const double R = pk.support_radius();
  const double xlo = grid.x(0), xhi = grid.x(grid.nx - 1);
  const double ylo = grid.y(0), yhi = grid.y(grid.ny - 1);
  if (pk.x0 - R < xlo || pk.x0 + R > xhi || pk.y0 - R < ylo || pk.y0 + R > yhi)
    throw config_error("packet does not fit");
  if (inside) {
    if (!inside(pk.x0, pk.y0)) throw config_error("packet does not fit");
    constexpr int kRing = 128;
    for (int k = 0; k < kRing; ++k) {
      const double th = 2.0 * kPi * k / kRing;
      if (!inside(pk.x0 + R * std::cos(th), pk.y0 + R * std::sin(th)))
        throw config_error("packet does not fit");
    }
  }

  ComplexField f(grid);
  const double a2 = pk.alpha * pk.alpha;
  const double amp = pk.alpha / std::sqrt(kPi);
  for (std::size_t i = 0; i < grid.nx; ++i) {
    const double x = grid.x(i);
    for (std::size_t j = 0; j < grid.ny; ++j) {
      const double y = grid.y(j);
      const double r2 = (x - pk.x0) * (x - pk.x0) + (y - pk.y0) * (y - pk.y0);
      const double mag = amp * std::exp(-0.5 * a2 * r2);
      const double phase = pk.px * x + pk.py * y;
      f.at(i, j) = mag * complexd(std::cos(phase), std::sin(phase));
    }
  }
  return f;
}

namespace {

// 5-node Gauss-Hermite rule for E[f(mu + sqrt(2) s t)] with weight e^{-t^2};
// exact for polynomials up to degree 9, which covers V and V^2 (degree 6).
constexpr int kGH = 5;
constexpr double kGHx[kGH] = {-2.0201828704560856, -0.9585724646138185, 0.0,
                              0.9585724646138185, 2.0201828704560856};
constexpr double kGHw[kGH] = {0.019953242059045913, 0.39361932315224116,
                              0.9453087204829419, 0.39361932315224116,
                              0.019953242059045913};

template <typename F>
double gauss2d(double x0, double y0, double sigma, F&& f) {
  const double sq2s = std::sqrt(2.0) * sigma;
  double acc = 0.0;
  for (int i = 0; i < kGH; ++i)
    for (int j = 0; j < kGH; ++j)
      acc += kGHw[i] * kGHw[j] * f(x0 + sq2s * kGHx[i], y0 + sq2s * kGHx[j]);
  return acc / kPi;
}

}  // namespace

double hh_packet_energy(const GaussianPacket& pk, const HenonHeilesParams& p) {
  const double a2 = pk.alpha * pk.alpha;
  const double kinetic = pk.px * pk.px + pk.py * pk.py + a2;
  const double sigma = 1.0 / (pk.alpha * std::sqrt(2.0));
  const double pot = gauss2d(pk.x0, pk.y0, sigma,
                             [&](double x, double y) { return hh_potential(x, y, p); });
  return kinetic + pot;
}

double hh_packet_energy_variance(const GaussianPacket& pk,
                                 const HenonHeilesParams& p) {
  // Phase-space (Wigner) Gaussian moments: momenta N(p_i, alpha^2/2) per axis
  // independent of positions N(r_i, 1/(2 alpha^2)).
  const double a2 = pk.alpha * pk.alpha;
  const double s2 = 0.5 * a2;
  const double var_kin =
      4.0 * s2 * (pk.px * pk.px + pk.py * pk.py) + 4.0 * s2 * s2;
  const double sigma = 1.0 / (pk.alpha * std::sqrt(2.0));
  const double ev = gauss2d(pk.x0, pk.y0, sigma,
                            [&](double x, double y) { return hh_potential(x, y, p); });
  const double ev2 = gauss2d(pk.x0, pk.y0, sigma, [&](double x, double y) {
    const double v = hh_potential(x, y, p);
    return v * v;
  });
  return var_kin + (ev2 - ev * ev);
}

}  // namespace eqlab
