#pragma once

#include <stdexcept>
#include <string>

namespace freqgan {

// Typed failures used across the library. Each maps to one class of contract
// violation so tests can assert on the exact failure mode.

struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericsError : std::runtime_error {
  explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateBatchError : std::runtime_error {
  explicit DegenerateBatchError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PadRequiredError : std::runtime_error {
  explicit PadRequiredError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace freqgan
