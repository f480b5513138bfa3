#pragma once

#include <stdexcept>
#include <string>

namespace ipctp {

/// Base class of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI when reporting failures.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class InstanceInvalid : public Error {
 public:
  explicit InstanceInvalid(const std::string& what) : Error("InstanceInvalid", what) {}
};

class NoEligibleCrane : public Error {
 public:
  explicit NoEligibleCrane(const std::string& what) : Error("NoEligibleCrane", what) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error("FormatError", what) {}
};

/// Discrete decisions that do not describe a structurally complete solution.
class InvalidDecisions : public Error {
 public:
  explicit InvalidDecisions(const std::string& what) : Error("InvalidDecisions", what) {}
};

class CyclicOrdering : public Error {
 public:
  explicit CyclicOrdering(const std::string& what) : Error("CyclicOrdering", what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error("BudgetExceeded", what) {}
};

class NoFeasibleSolution : public Error {
 public:
  explicit NoFeasibleSolution(const std::string& what) : Error("NoFeasibleSolution", what) {}
};

class ConfigInvalid : public Error {
 public:
  explicit ConfigInvalid(const std::string& what) : Error("ConfigInvalid", what) {}
};

}  // namespace ipctp
