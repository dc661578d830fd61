#pragma once

#include <stdexcept>
#include <string>

namespace burstforge {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched image/kernel/matrix shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Invalid argument values (negative sigma, empty input, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// File could not be read, written or decoded; message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

// File decoded but its format is unsupported (e.g. 16-bit PNG).
class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

// Oracle comparator asked to compare a frame without a ground-truth score.
class MissingLabelError : public Error {
 public:
  using Error::Error;
};

// f_c(i,j) + f_c(j,i) == 0, so the pair probability is undefined.
class DegeneratePairError : public Error {
 public:
  using Error::Error;
};

// Trajectory point falls outside the PSF grid.
class OutOfSupportError : public Error {
 public:
  using Error::Error;
};

// Tied ground-truth scores make the weighted Kendall distance ill-posed.
class TieError : public Error {
 public:
  using Error::Error;
};

// Bradley-Terry likelihood has no finite maximizer (disconnected graph,
// item with zero wins).
class DegenerateLikelihoodError : public Error {
 public:
  using Error::Error;
};

// A comparator call failed; message names the offending pair.
class ComparatorError : public Error {
 public:
  using Error::Error;
};

}  // namespace burstforge
