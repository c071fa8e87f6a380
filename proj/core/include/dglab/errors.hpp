#ifndef DGLAB_ERRORS_HPP
#define DGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dglab {

/// A state left the admissible set of its conservation law (e.g. negative
/// density or pressure for Euler).
class InadmissibleStateError : public std::runtime_error {
 public:
  explicit InadmissibleStateError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A time-integration stage produced non-finite values.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, int stage)
      : std::runtime_error(what), stage_(stage) {}
  int stage() const { return stage_; }

 private:
  int stage_;
};

/// Invalid or inconsistent run configuration (maps to CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dglab

#endif
