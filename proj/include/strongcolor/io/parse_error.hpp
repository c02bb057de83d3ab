#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strongcolor::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(std::move(reason)) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace strongcolor::io
