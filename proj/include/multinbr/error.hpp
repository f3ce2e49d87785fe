// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace multinbr {

/// Error categories. The numeric values are part of the C API and the CLI
/// exit codes, so they must not be renumbered.
enum class ErrorCode : int {
  kOk = 0,
  kParameter = 2,
  kCapacity = 3,
  kFormat = 4,
  kStructural = 5,
  kIo = 6,
  kInternal = 9,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Invalid argument value (probability outside [0,1], empty vertex set, ...).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what)
      : Error(ErrorCode::kParameter, what) {}
};

/// Input exceeds a configured brute-force or enumeration cap.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what)
      : Error(ErrorCode::kCapacity, what) {}
};

/// Malformed text/CSV input.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what)
      : Error(ErrorCode::kFormat, what) {}
};

/// A filtration that is unsorted or not closed under faces.
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what)
      : Error(ErrorCode::kStructural, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

}  // namespace multinbr
