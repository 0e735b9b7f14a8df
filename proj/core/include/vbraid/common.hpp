#pragma once

#include <stdexcept>
#include <string>

namespace vbraid {

// Raised when an input is well-formed syntactically but violates a
// mathematical precondition (failed axiom, bad dimension, budget misuse).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

enum class Decision { Equal, NotEqual, Undecided };

const char* to_string(Decision d);

}  // namespace vbraid
