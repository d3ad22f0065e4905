#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace exemplar {

/// Exception carrying a stable machine-readable category. The CLI renders
/// these as `error:<category>: <message>` on stderr.
///
/// Categories in use: "usage", "io", "parse", "format", "data", "config",
/// "size", "numeric", "internal".
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

}  // namespace exemplar
