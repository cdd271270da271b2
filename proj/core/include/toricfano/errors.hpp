#pragma once

#include <stdexcept>
#include <string>

namespace toricfano {

/// Malformed or inadmissible input data (bad Dynkin type, bad index, bad ray).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates an operation's precondition
/// (element outside z(k), non-complete fan passed to a Fano test, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace toricfano
