#pragma once

#include <stdexcept>
#include <string>

namespace nakaoka {

// Domain error carrying the documented error name (e.g. "NotLatinSquare").
// The CLI maps these to exit code 1 and prints `name: detail`.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace nakaoka
