#pragma once

#include "eqlab/field.hpp"

namespace eqlab {

/// Unitary position -> momentum transform (hbar = 1, angular momentum axes):
///   psi~(k) = dx dy / (2 pi) * sum_j psi_j exp(-i k . r_j)
/// on the centered momentum grid of momentum_grid(f.grid), so Parseval holds:
/// sum |psi~|^2 dkx dky = sum |psi|^2 dx dy. Axes are monotone from -k_max.
ComplexField to_momentum(const ComplexField& f);

/// Inverse of to_momentum: expects a field on a centered momentum grid plus
/// the position grid it came from.
ComplexField from_momentum(const ComplexField& ft, const Grid2D& position_grid);

/// (<p_x>, <p_y>) evaluated in the momentum representation.
std::pair<double, double> expectation_momentum(const ComplexField& f);

/// <p^2> = <f| -laplacian |f>, evaluated spectrally.
double expectation_kinetic(const ComplexField& f);

/// H f with H = p^2 + V (m = 1/2, hbar = 1); V given on the same grid.
ComplexField apply_hamiltonian(const ComplexField& f, const RealField& V);

}  // namespace eqlab
