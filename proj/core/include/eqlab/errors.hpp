#pragma once

#include <stdexcept>
#include <string>

namespace eqlab {

/// Invalid run configuration or precondition violation detectable before any
/// compute starts. CLI exit code 2.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical tolerance was exceeded during compute (norm drift, failed
/// convergence, degenerate data). CLI exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// File or stream failure. CLI exit code 4.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eqlab
