#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gpd {

// Index of an element within one groupoid, in insertion order.
using Elem = std::int32_t;
inline constexpr Elem kNoElem = -1;

// Default bound for exhaustive searches (isomorphism, slice enumeration).
inline constexpr int kDefaultSizeGuard = 5000;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown labels, conflicting table entries, bad schema.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the input exceeds the configured bound.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// An operation was called on data that fails its declared preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  bool close(double a, double b) const {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(abs, rel * scale);
  }
};

}  // namespace gpd
