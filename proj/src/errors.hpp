#pragma once

#include <stdexcept>
#include <string>

namespace cibound {

enum class Errc {
  InvalidInput = 1,
  DivisionByZero,
  FieldMismatch,
  SyntaxError,
  InhomogeneousError,
  UnsupportedField,
  UnsupportedSize,
  DegenerateDenominator,
  IntegralityViolation,
  OrbitBudgetExceeded,
  InsufficientSmoothSamples,
  CharMismatch,
  DivisibilityViolation,
  CacheCorrupt,
  Internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failure carrying the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(Errc::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cibound
