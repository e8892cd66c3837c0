#include "eqlab/field.hpp"

#include <cmath>
#include <utility>

#include "eqlab/stats.hpp"

namespace eqlab {

ComplexField::ComplexField(const Grid2D& g, std::vector<complexd> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size())
    throw config_error("ComplexField: value count does not match grid");
}

RealField::RealField(const Grid2D& g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size())
    throw config_error("RealField: value count does not match grid");
}

double norm_squared(const ComplexField& f) {
  KahanSum s;
  for (const auto& z : f.values) s.add(std::norm(z));
  return s.value() * f.grid.cell_area();
}

double integral(const RealField& f) {
  KahanSum s;
  for (double v : f.values) s.add(v);
  return s.value() * f.grid.cell_area();
}

complexd inner_product(const ComplexField& f, const ComplexField& g) {
  if (!(f.grid == g.grid))
    throw config_error("inner_product: fields live on different grids");
  KahanSum re, im;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const complexd z = std::conj(f.values[i]) * g.values[i];
    re.add(z.real());
    im.add(z.imag());
  }
  const double a = f.grid.cell_area();
  return {re.value() * a, im.value() * a};
}

ComplexField normalize(const ComplexField& f) {
  const double n2 = norm_squared(f);
  if (!(n2 > 0.0)) throw numeric_error("degenerate field");
  const double s = 1.0 / std::sqrt(n2);
  ComplexField out(f.grid);
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = s * f.values[i];
  return out;
}

RealField density(const ComplexField& f) {
  RealField out(f.grid);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    out.values[i] = std::norm(f.values[i]);
  return out;
}

std::pair<double, double> expectation_position(const ComplexField& f) {
  KahanSum sx, sy, sn;
  for (std::size_t i = 0; i < f.grid.nx; ++i) {
    const double x = f.grid.x(i);
    for (std::size_t j = 0; j < f.grid.ny; ++j) {
      const double w = std::norm(f.at(i, j));
      sx.add(w * x);
      sy.add(w * f.grid.y(j));
      sn.add(w);
    }
  }
  return {sx.value() / sn.value(), sy.value() / sn.value()};
}

}  // namespace eqlab
