#include "eqlab/fourier.hpp"

#include <fftw3.h>

#include <mutex>

#include "eqlab/stats.hpp"

namespace eqlab {

namespace {

// FFTW plan creation is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanPair {
  fftw_plan fwd = nullptr, bwd = nullptr;
  ~PlanPair() {
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
  }
};

}  // namespace

namespace detail {

// In-place 2D c2c FFT on a row-major (ny fastest) buffer. FFTW_ESTIMATE keeps
// plan selection deterministic run to run (FFTW_MEASURE picks timing-dependent
// algorithms, which breaks the byte-identical-rerun contract).
void fft2_inplace(complexd* data, std::size_t nx, std::size_t ny, bool forward) {
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_2d(static_cast<int>(nx), static_cast<int>(ny),
                            reinterpret_cast<fftw_complex*>(data),
                            reinterpret_cast<fftw_complex*>(data),
                            forward ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace detail

ComplexField to_momentum(const ComplexField& f) {
  const Grid2D& g = f.grid;
  const Grid2D kg = momentum_grid(g);
  ComplexField out(kg);

  // psi~(k_m) = c * exp(-i k_m . r0) * DFT[ psi_j * (-1)^(i+j) ]_m with the
  // centered index m - n/2 absorbed by the checkerboard sign.
  for (std::size_t i = 0; i < g.nx; ++i)
    for (std::size_t j = 0; j < g.ny; ++j) {
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      out.values[g.index(i, j)] = sign * f.values[g.index(i, j)];
    }
  detail::fft2_inplace(out.values.data(), g.nx, g.ny, /*forward=*/true);

  const double c = g.cell_area() / (2.0 * kPi);
  for (std::size_t m = 0; m < kg.nx; ++m) {
    const double kx = kg.x(m);
    for (std::size_t n = 0; n < kg.ny; ++n) {
      const double ky = kg.y(n);
      const double phase = -(kx * g.x0 + ky * g.y0);
      out.values[kg.index(m, n)] *=
          c * complexd(std::cos(phase), std::sin(phase));
    }
  }
  return out;
}

ComplexField from_momentum(const ComplexField& ft, const Grid2D& position_grid) {
  const Grid2D& g = position_grid;
  if (!ft.grid.same_shape(g))
    throw config_error("from_momentum: momentum field shape mismatch");
  const Grid2D kg = ft.grid;

  ComplexField out(g);
  for (std::size_t m = 0; m < kg.nx; ++m) {
    const double kx = kg.x(m);
    for (std::size_t n = 0; n < kg.ny; ++n) {
      const double ky = kg.y(n);
      const double phase = kx * g.x0 + ky * g.y0;
      out.values[kg.index(m, n)] =
          ft.values[kg.index(m, n)] * complexd(std::cos(phase), std::sin(phase));
    }
  }
  detail::fft2_inplace(out.values.data(), g.nx, g.ny, /*forward=*/false);

  const double c = kg.cell_area() / (2.0 * kPi);
  for (std::size_t i = 0; i < g.nx; ++i)
    for (std::size_t j = 0; j < g.ny; ++j) {
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      out.values[g.index(i, j)] *= sign * c;
    }
  return out;
}

std::pair<double, double> expectation_momentum(const ComplexField& f) {
  const ComplexField ft = to_momentum(f);
  KahanSum sx, sy, sn;
  for (std::size_t m = 0; m < ft.grid.nx; ++m) {
    const double kx = ft.grid.x(m);
    for (std::size_t n = 0; n < ft.grid.ny; ++n) {
      const double w = std::norm(ft.at(m, n));
      sx.add(w * kx);
      sy.add(w * ft.grid.y(n));
      sn.add(w);
    }
  }
  return {sx.value() / sn.value(), sy.value() / sn.value()};
}

double expectation_kinetic(const ComplexField& f) {
  const ComplexField ft = to_momentum(f);
  KahanSum s, sn;
  for (std::size_t m = 0; m < ft.grid.nx; ++m) {
    const double kx = ft.grid.x(m);
    for (std::size_t n = 0; n < ft.grid.ny; ++n) {
      const double ky = ft.grid.y(n);
      const double w = std::norm(ft.at(m, n));
      s.add(w * (kx * kx + ky * ky));
      sn.add(w);
    }
  }
  return s.value() / sn.value();
}

ComplexField apply_hamiltonian(const ComplexField& f, const RealField& V) {
  if (!(f.grid == V.grid))
    throw config_error("apply_hamiltonian: potential grid mismatch");
  const Grid2D& g = f.grid;

  // Kinetic part spectrally, on the unshifted FFT layout.
  ComplexField kin = f;
  detail::fft2_inplace(kin.values.data(), g.nx, g.ny, true);
  const double dkx = g.dkx(), dky = g.dky();
  for (std::size_t m = 0; m < g.nx; ++m) {
    const double kx = dkx * (m <= g.nx / 2 ? static_cast<double>(m)
                                           : static_cast<double>(m) -
                                                 static_cast<double>(g.nx));
    for (std::size_t n = 0; n < g.ny; ++n) {
      const double ky = dky * (n <= g.ny / 2 ? static_cast<double>(n)
                                             : static_cast<double>(n) -
                                                   static_cast<double>(g.ny));
      kin.values[g.index(m, n)] *= (kx * kx + ky * ky);
    }
  }
  detail::fft2_inplace(kin.values.data(), g.nx, g.ny, false);
  const double inv = 1.0 / static_cast<double>(g.size());

  ComplexField out(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    out.values[i] = kin.values[i] * inv + V.values[i] * f.values[i];
  return out;
}

}  // namespace eqlab
