#pragma once

#include <stdexcept>
#include <string>

namespace pointint {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates a documented precondition (non-positive mass, det != 1, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Matrix is not of the form e^{i theta} U with U real unimodular.
class NotConnectionForm : public Error {
 public:
  using Error::Error;
};

// v+^dagger M^{-1} u+ vanished for a matrix that does not conserve current.
class SingularProjection : public Error {
 public:
  using Error::Error;
};

// Schrodinger mode vectors requested inside a region with A != 0.
class ModesRequireFreeSpace : public Error {
 public:
  using Error::Error;
};

// Dirac energy at (or below) the mass gap: no propagating modes.
class DegenerateModes : public Error {
 public:
  using Error::Error;
};

// beta == 0 and alpha + delta == -2: the beta = 0 renormalization scheme has
// a vanishing denominator.
class SingularRenormalization : public Error {
 public:
  using Error::Error;
};

}  // namespace pointint
