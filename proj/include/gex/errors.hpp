#pragma once

#include <stdexcept>
#include <string>

namespace gex {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidArgument : Error {
  using Error::Error;
};
struct NotPositiveSemidefinite : Error {
  using Error::Error;
};
struct NotPositiveDefinite : Error {
  using Error::Error;
};
struct EmbeddingFailed : Error {
  using Error::Error;
};
struct FaceExplosion : Error {
  using Error::Error;
};
struct SearchCapExceeded : Error {
  using Error::Error;
};
struct LimitExceeded : Error {
  using Error::Error;
};
struct DegenerateDenominator : Error {
  using Error::Error;
};
struct ScheduleUndefined : Error {
  using Error::Error;
};
struct SavageConditionFails : Error {
  using Error::Error;
};
struct HypothesisViolated : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace gex
