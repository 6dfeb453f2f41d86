#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bttb {

/// Invalid argument; `field()` names the offending input.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Vector length does not match the operator shape.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense assembly refused because the matrix would not fit under the guard.
class MemoryGuardError : public std::runtime_error {
 public:
  MemoryGuardError(std::uint64_t required, std::uint64_t available)
      : std::runtime_error("dense sensitivity needs " + std::to_string(required) +
                           " bytes, memory guard allows " + std::to_string(available)),
        required_(required),
        available_(available) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t available() const noexcept { return available_; }

 private:
  std::uint64_t required_;
  std::uint64_t available_;
};

}  // namespace bttb
