#pragma once

#include <stdexcept>
#include <string>

namespace radgas {

// Raised when the state stops being finite (the run has left the small-data regime).
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

class WallTimeExceeded : public std::runtime_error {
 public:
  WallTimeExceeded(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace radgas
