#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oak {

/// Malformed textual input. Carries the offending token and its byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string token, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position) + " near '" +
                           token + "'"),
        message_(message),
        token_(std::move(token)),
        position_(position) {}

  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::string token_;
  std::size_t position_;
};

/// Division by an exactly-zero scalar (including a localized inverse whose factor vanishes).
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace oak
