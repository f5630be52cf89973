#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swih {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File parsing / serialization failures.
class IoError : public Error {
 public:
  using Error::Error;
};

// normalize() on an all-zero histogram (empty or fully masked region).
class ZeroMassError : public Error {
 public:
  using Error::Error;
};

// Even or non-positive kernel dimensions, bad sigma.
class InvalidKernelError : public Error {
 public:
  using Error::Error;
};

// Offset outside the kernel, rectangle or bin outside the table.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Kernel kind without a quadrant-affine decomposition was handed to the
// exact O(1) path; callers should use the wedding-cake or brute baselines.
class UnsupportedKernelError : public Error {
 public:
  using Error::Error;
};

// Strict-policy window not fully inside the image.
class WindowOutOfBoundsError : public Error {
 public:
  using Error::Error;
};

// Integral tables would exceed the configured memory budget.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& msg, std::size_t required_bytes)
      : Error(msg), required_bytes_(required_bytes) {}
  std::size_t required_bytes() const noexcept { return required_bytes_; }

 private:
  std::size_t required_bytes_ = 0;
};

// Invalid run configuration (ring count, scene geometry, bad flag values).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Target model does not fit the template / quantizer it is used with.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Kernel larger than the search image.
class SizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace swih
