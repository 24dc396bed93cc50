#pragma once

#include <stdexcept>
#include <string>

namespace conjposet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed GroupSpec text.
class SpecParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed spec whose parameters violate a family constraint.
class SpecInvalid : public Error {
 public:
  using Error::Error;
};

// Resource caps. The CLI maps both to exit code 3.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class SubgroupCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class PrimeNotInOrder : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

}  // namespace conjposet
