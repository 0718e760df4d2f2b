#pragma once

#include <stdexcept>
#include <string>

namespace ckforms {

enum class ErrorKind {
  UnsupportedFamily,
  DimensionCapExceeded,
  SignatureViolation,
  IncompatiblePair,
  ThetaIncompatibleEmbedding,
  DegenerateForm,
  DimensionMismatch,
  SearchBudgetExceeded,
  NotAComplexificationPair,
  DegreeTooLarge,
  UnsupportedSpace,
  DegeneratePairing,
  NotARingMap,
  ParseError,
  ConfigError,
  IoError,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string expected)
      : Error(ErrorKind::ParseError,
              what + " at position " + std::to_string(position) +
                  (expected.empty() ? "" : " (expected " + expected + ")")),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace ckforms
