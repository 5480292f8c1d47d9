#pragma once

#include <stdexcept>
#include <string>

namespace strrecon {

// A string contains a symbol outside the alphabet it is used with.
class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke an operation's precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A query budget or a search hard cap was exhausted.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The adversarial oracle could not find an answer valid for both strings.
class AdversaryBroken : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TranscriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace strrecon
