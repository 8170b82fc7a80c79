#pragma once

#include <stdexcept>
#include <string>

namespace kincal {

/// Base class of every recoverable error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Raised by log() when the rotation angle is within 1e-6 of pi. The twist
/// chart is ill-conditioned there; callers must treat the linearization as
/// diverged instead of trusting the residual.
class AngleNearPi : public Error {
 public:
  explicit AngleNearPi(double angle_rad, const std::string& context = {})
      : Error("rotation angle " + std::to_string(angle_rad) +
              " rad is too close to pi for a well-conditioned log()" +
              (context.empty() ? "" : " [" + context + "]")),
        angle_rad_(angle_rad) {}
  double angle_rad() const { return angle_rad_; }

 private:
  double angle_rad_;
};

/// Joint-state length does not match the chain it is applied to.
class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t expected, std::size_t got)
      : Error("joint state has " + std::to_string(got) + " angles, chain has " +
              std::to_string(expected) + " joints") {}
};

/// The (reduced) normal equations are not positive definite, typically
/// because a camera variable carries no detections.
class IndefiniteSystem : public Error {
 public:
  explicit IndefiniteSystem(const std::string& what_arg) : Error(what_arg) {}
};

/// A calibration problem with no usable frames.
class EmptyProblem : public Error {
 public:
  explicit EmptyProblem(const std::string& what_arg) : Error(what_arg) {}
};

/// A declared camera that appears in no detection of the dataset.
class UnobservedCamera : public Error {
 public:
  explicit UnobservedCamera(const std::string& camera)
      : Error("camera '" + camera + "' has no detections in the dataset"),
        camera_(camera) {}
  const std::string& camera() const { return camera_; }

 private:
  std::string camera_;
};

/// Evaluation requested against a dataset without ground truth.
class MissingGroundTruth : public Error {
 public:
  explicit MissingGroundTruth(const std::string& what_arg) : Error(what_arg) {}
};

/// Simulation culled every detection for at least one camera; the scenario
/// cannot produce a solvable dataset.
class NoVisibleFrames : public Error {
 public:
  explicit NoVisibleFrames(const std::string& what_arg) : Error(what_arg) {}
};

/// Malformed or inconsistent configuration / input file.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what_arg) : Error(what_arg) {}
};

}  // namespace kincal
