#pragma once

#include <complex>
#include <vector>

#include "eqlab/grid.hpp"

namespace eqlab {

using complexd = std::complex<double>;

/// Complex scalar field on a Grid2D. Amplitude carries dimension 1/length so
/// that sum |psi|^2 dx dy is dimensionless. Fields are immutable values in
/// spirit: operations return new fields, nothing here is shared mutable state.
struct ComplexField {
  Grid2D grid;
  std::vector<complexd> values;

  ComplexField() = default;
  explicit ComplexField(const Grid2D& g) : grid(g), values(g.size()) {}
  ComplexField(const Grid2D& g, std::vector<complexd> v);

  complexd& at(std::size_t i, std::size_t j) { return values[grid.index(i, j)]; }
  const complexd& at(std::size_t i, std::size_t j) const {
    return values[grid.index(i, j)];
  }
};

/// Real scalar field (densities, eigenfunctions, phase maps).
struct RealField {
  Grid2D grid;
  std::vector<double> values;

  RealField() = default;
  explicit RealField(const Grid2D& g) : grid(g), values(g.size()) {}
  RealField(const Grid2D& g, std::vector<double> v);

  double& at(std::size_t i, std::size_t j) { return values[grid.index(i, j)]; }
  const double& at(std::size_t i, std::size_t j) const {
    return values[grid.index(i, j)];
  }
};

/// sum |f|^2 dx dy (compensated summation).
double norm_squared(const ComplexField& f);

/// integral of a real field, sum f dx dy.
double integral(const RealField& f);

/// <f|g> = sum conj(f) g dx dy. Throws config_error on grid mismatch.
complexd inner_product(const ComplexField& f, const ComplexField& g);

/// Rescale to unit norm. Throws numeric_error("degenerate field") if the norm
/// vanishes.
ComplexField normalize(const ComplexField& f);

/// |f|^2 as a RealField on the same grid.
RealField density(const ComplexField& f);

/// Position-representation first moments (<x>, <y>) of |f|^2 (f normalized).
std::pair<double, double> expectation_position(const ComplexField& f);

}  // namespace eqlab
