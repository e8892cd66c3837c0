#pragma once

#include <optional>
#include <string>
#include <variant>

#include "eqlab/field.hpp"

namespace eqlab {

/// Field snapshot binary format "EQLB1" (little-endian, bit-exact round trip):
///   magic "EQLB1" (5 bytes)
///   flag  (1 byte): 0 = real payload, 1 = complex payload
///   nx, ny                   u64
///   x0, y0, dx, dy, t        f64
///   payload: row-major (y fastest) f64 singletons (real) or (re, im) pairs.
/// `t` is the snapshot time; pass 0 when not meaningful.

void write_field(const std::string& path, const ComplexField& f, double t = 0.0);
void write_field(const std::string& path, const RealField& f, double t = 0.0);

struct FieldSnapshot {
  std::variant<RealField, ComplexField> field;
  double t = 0.0;

  bool is_complex() const { return field.index() == 1; }
  const ComplexField& as_complex() const { return std::get<ComplexField>(field); }
  const RealField& as_real() const { return std::get<RealField>(field); }
};

FieldSnapshot read_field(const std::string& path);

}  // namespace eqlab
