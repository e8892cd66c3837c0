#include "eqlab/field_io.hpp"

#include <array>
#include <cstring>
#include <fstream>

namespace eqlab {

namespace {

constexpr char kMagic[5] = {'E', 'Q', 'L', 'B', '1'};

void put_u64(std::ofstream& os, std::uint64_t v) {
  std::array<unsigned char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b.data()), 8);
}

void put_f64(std::ofstream& os, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_u64(os, bits);
}

std::uint64_t get_u64(std::ifstream& is) {
  std::array<unsigned char, 8> b;
  is.read(reinterpret_cast<char*>(b.data()), 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

double get_f64(std::ifstream& is) {
  const std::uint64_t bits = get_u64(is);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

void write_header(std::ofstream& os, unsigned char flag, const Grid2D& g, double t) {
  os.write(kMagic, 5);
  os.write(reinterpret_cast<const char*>(&flag), 1);
  put_u64(os, g.nx);
  put_u64(os, g.ny);
  put_f64(os, g.x0);
  put_f64(os, g.y0);
  put_f64(os, g.dx);
  put_f64(os, g.dy);
  put_f64(os, t);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw io_error("cannot open for writing: " + path);
  return os;
}

}  // namespace

void write_field(const std::string& path, const ComplexField& f, double t) {
  auto os = open_out(path);
  write_header(os, 1, f.grid, t);
  for (const auto& z : f.values) {
    put_f64(os, z.real());
    put_f64(os, z.imag());
  }
  if (!os) throw io_error("write failed: " + path);
}

void write_field(const std::string& path, const RealField& f, double t) {
  auto os = open_out(path);
  write_header(os, 0, f.grid, t);
  for (double v : f.values) put_f64(os, v);
  if (!os) throw io_error("write failed: " + path);
}

FieldSnapshot read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open for reading: " + path);

  char magic[5];
  unsigned char flag = 0;
  is.read(magic, 5);
  is.read(reinterpret_cast<char*>(&flag), 1);
  if (!is || std::memcmp(magic, kMagic, 5) != 0)
    throw io_error("not an EQLB1 field file: " + path);
  if (flag > 1) throw io_error("unknown EQLB1 payload flag in " + path);

  const std::uint64_t nx = get_u64(is);
  const std::uint64_t ny = get_u64(is);
  const double x0 = get_f64(is), y0 = get_f64(is);
  const double dx = get_f64(is), dy = get_f64(is);
  const double t = get_f64(is);
  if (!is) throw io_error("truncated EQLB1 header: " + path);

  Grid2D g(nx, ny, x0, y0, dx, dy);
  FieldSnapshot snap;
  snap.t = t;
  if (flag == 1) {
    ComplexField f(g);
    for (auto& z : f.values) {
      const double re = get_f64(is);
      const double im = get_f64(is);
      z = {re, im};
    }
    if (!is) throw io_error("truncated EQLB1 payload: " + path);
    snap.field = std::move(f);
  } else {
    RealField f(g);
    for (auto& v : f.values) v = get_f64(is);
    if (!is) throw io_error("truncated EQLB1 payload: " + path);
    snap.field = std::move(f);
  }
  return snap;
}

}  // namespace eqlab
