#pragma once

#include <stdexcept>
#include <string>

namespace texp {

// Bad user input: non-coprime bases, base <= 1, malformed numbers, bad caps.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke an operation's documented precondition.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested search volume exceeds the configured ceiling.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Survey checkpoint is unreadable or belongs to another configuration.
class checkpoint_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace texp
