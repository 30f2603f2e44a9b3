#ifndef TOPPKIT_ERRORS_H_
#define TOPPKIT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toppkit {

// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation has no closed form for the given instance.
class UnsupportedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by sweeps and the oracle when an instance has no admissible profile.
class InfeasibleInstance : public std::runtime_error {
 public:
  InfeasibleInstance(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace toppkit

#endif  // TOPPKIT_ERRORS_H_
