#pragma once

#include <stdexcept>
#include <string>

namespace nullcert {

// Caller broke an interface contract (dimension mismatch, bad argument).
class ContractError : public std::logic_error {
public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Ambient dimension above the supported range.
class UnsupportedDimensionError : public ContractError {
public:
  explicit UnsupportedDimensionError(const std::string& what) : ContractError(what) {}
};

// Input is structurally legal but degenerate for the requested operation
// (all-zero generator list, zero polynomial, polytope without full dimension).
class DegenerateInputError : public std::runtime_error {
public:
  explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

// A stated theorem hypothesis does not hold for the given data.
class HypothesisError : public std::runtime_error {
public:
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// Input file could not be parsed or validated.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nullcert
