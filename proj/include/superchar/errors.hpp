#pragma once

#include <stdexcept>
#include <string>

namespace superchar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};
struct NotIntegral : Error {
  using Error::Error;
};
struct NotRegular : Error {
  using Error::Error;
};
struct NotStrictlyDominant : Error {
  using Error::Error;
};
struct NotComparable : Error {
  using Error::Error;
};
struct NotInRootLattice : Error {
  using Error::Error;
};
struct NotInSpan : Error {
  using Error::Error;
};
struct MalformedDiagram : Error {
  using Error::Error;
};
struct NoSuchLabel : Error {
  using Error::Error;
};
struct NotPDC : Error {
  using Error::Error;
};
struct NotInPLambda : Error {
  using Error::Error;
};
struct NonIntegerCoefficient : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
  std::size_t position;
};

}  // namespace superchar
