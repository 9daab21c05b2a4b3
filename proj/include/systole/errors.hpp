#pragma once

#include <stdexcept>
#include <string>

namespace systole {

/// Argument outside the domain of a bound function or geometric operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Translation length requested for an element that is not loxodromic.
class NotLoxodromicError : public DomainError {
 public:
  explicit NotLoxodromicError(const std::string& what) : DomainError(what) {}
};

/// Lattice generators that are (numerically) linearly dependent over the reals.
class DegenerateLatticeError : public DomainError {
 public:
  explicit DegenerateLatticeError(const std::string& what) : DomainError(what) {}
};

}  // namespace systole
