#pragma once

#include <stdexcept>
#include <string>

namespace cyclecert {

using Vertex = int;
using Colour = int;

/// Bad user input: malformed files, out-of-range parameters, violated
/// preconditions. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search ran out of its configured budget. Maps to CLI
/// exit code 3; never silently truncated into a "not found".
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Graph handed to the exact solver exceeds its configured vertex limit.
class SolverLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Accept/reject verdict with the first failing check spelled out.
struct VerifyResult {
  bool accepted = false;
  std::string reason;  // empty on accept

  static VerifyResult ok() { return {true, {}}; }
  static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

}  // namespace cyclecert
