#pragma once

#include <stdexcept>
#include <string>

namespace zagreb {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (sequence strings, edge-list files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A degree sequence has no connected realization.
class EmptyRealizationSet : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exhaustive search refused because the order exceeds the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(int order, int cap)
      : Error("order " + std::to_string(order) + " exceeds oracle cap " +
              std::to_string(cap)),
        order_(order),
        cap_(cap) {}

  int order() const noexcept { return order_; }
  int cap() const noexcept { return cap_; }

 private:
  int order_;
  int cap_;
};

}  // namespace zagreb
