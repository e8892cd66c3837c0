#pragma once

#include <functional>
#include <optional>

#include "eqlab/field.hpp"
#include "eqlab/models.hpp"

namespace eqlab {

/// Initial-state parameters: psi = (alpha/sqrt(pi)) exp(-alpha^2 (r-r_i)^2/2)
/// exp(i p_i . r). Position density width per axis is 1/(alpha sqrt(2)),
/// momentum density width per axis is alpha/sqrt(2).
struct GaussianPacket {
  double alpha = 1.0;
  double x0 = 0.0, y0 = 0.0;
  double px = 0.0, py = 0.0;

  double support_radius() const { return 5.0 / alpha; }
};

/// Evaluate the packet on a grid and renormalize to unit grid norm.
/// The packet support (5/alpha around r_i) must fit inside the grid, and, if
/// `inside` is provided (billiard wall / confinement box predicate), inside
/// that region as well; otherwise throws config_error("packet does not fit").
ComplexField make_gaussian_packet(
    const GaussianPacket& pk, const Grid2D& grid,
    const std::function<bool(double, double)>& inside = nullptr);

/// Exact Gaussian-moment expectation of H = p^2 + V for the Henon-Heiles
/// potential (closed form; no grid involved): used to pick ensemble energies
/// consistent with the quantum packet.
double hh_packet_energy(const GaussianPacket& pk, const HenonHeilesParams& p);

/// Exact energy variance of the packet under H = p^2 + V_HH (Gaussian moments).
double hh_packet_energy_variance(const GaussianPacket& pk,
                                 const HenonHeilesParams& p);

}  // namespace eqlab
