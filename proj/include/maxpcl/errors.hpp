#pragma once

#include <stdexcept>
#include <string>

namespace maxpcl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// h has a pole at the requested point (tan-charts, Lambda at z = 1, ...).
class PoleError : public Error {
 public:
  using Error::Error;
};

class PoleOnPathError : public Error {
 public:
  using Error::Error;
};

class QuadratureDivergence : public Error {
 public:
  using Error::Error;
};

class NotUnitModulus : public Error {
 public:
  using Error::Error;
};

class SingularPointError : public Error {
 public:
  using Error::Error;
};

class DivisionBySqrtZero : public Error {
 public:
  using Error::Error;
};

class DegenerateCriteria : public Error {
 public:
  using Error::Error;
};

class UnmappedClass : public Error {
 public:
  using Error::Error;
};

class InvalidFamilyParameter : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxpcl
