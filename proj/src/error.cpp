// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/error.hpp"

namespace multinbr {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "ok";
    case ErrorCode::kParameter: return "parameter";
    case ErrorCode::kCapacity: return "capacity";
    case ErrorCode::kFormat: return "format";
    case ErrorCode::kStructural: return "structural";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace multinbr
