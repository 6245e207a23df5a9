#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chernlat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two classes (or a class and a surface) that live on different surfaces.
class SurfaceMismatch : public Error {
 public:
  using Error::Error;
};

/// D^2 + D.K came out odd. Impossible for an honest lattice class, so this
/// means corrupted input or a bug upstream.
class ParityViolation : public Error {
 public:
  using Error::Error;
};

/// A query outside the range where the classification is proven complete.
class UnsupportedRange : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace chernlat
