#pragma once

#include <stdexcept>
#include <string>

namespace tessellate {

/// Base class for all geometry/simulation errors raised by this library.
class TessError : public std::runtime_error {
 public:
  explicit TessError(const std::string& what) : std::runtime_error(what) {}
};

/// A cut produced a piece below the volume floor although the hyperplane
/// intersects the interior shell. Callers are expected to resample.
class DegenerateCut : public TessError {
 public:
  explicit DegenerateCut(const std::string& what) : TessError(what) {}
};

/// The hyperplane misses the polytope or merely grazes it.
class NotSeparating : public TessError {
 public:
  explicit NotSeparating(const std::string& what) : TessError(what) {}
};

/// A hard-core kernel cannot split this cell (eroded body is empty).
class UnsplittableCell : public TessError {
 public:
  explicit UnsplittableCell(const std::string& what) : TessError(what) {}
};

/// Rejection sampler exceeded its iteration budget.
class RejectionOverflow : public TessError {
 public:
  explicit RejectionOverflow(const std::string& what) : TessError(what) {}
};

/// Monotone bisection failed to bracket or converge.
class BisectionFailure : public TessError {
 public:
  explicit BisectionFailure(const std::string& what) : TessError(what) {}
};

/// Query point lies outside the simulation window.
class OriginOutsideWindow : public TessError {
 public:
  explicit OriginOutsideWindow(const std::string& what) : TessError(what) {}
};

/// Configuration file / CLI argument problem.
class ConfigError : public TessError {
 public:
  explicit ConfigError(const std::string& what) : TessError(what) {}
};

}  // namespace tessellate
