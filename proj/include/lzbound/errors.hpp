#pragma once

#include <stdexcept>
#include <string>

namespace lzbound {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter ball origin (x=y=z=0): level crossing, eigenbasis undefined.
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

// Query time outside [0, total_time].
class TimeOutOfRange : public Error {
 public:
  using Error::Error;
};

// Closed-form solver applied to the wrong path variant.
class SolverMismatch : public Error {
 public:
  using Error::Error;
};

// Gamma evaluated at a nonpositive integer.
class PoleOfGamma : public Error {
 public:
  using Error::Error;
};

// A series or iteration hit its term/step cap before reaching tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Argument outside a function's real domain.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

// Adaptive integrator forced below its minimum step size.
class StepSizeUnderflow : public Error {
 public:
  using Error::Error;
};

class ToleranceNotMet : public Error {
 public:
  using Error::Error;
};

// Series comparison attempted on different time grids.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace lzbound
