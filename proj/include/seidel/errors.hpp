#pragma once

#include <stdexcept>
#include <string>

namespace seidel {

// Thrown for malformed user input (partition strings, graph6, flags).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ExactDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonMonicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroPolynomialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A partition with a non-positive part.
class InvalidPartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class EmptyPartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroVectorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AsymmetryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem check or an exact/numeric cross-check disagreed.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seidel
