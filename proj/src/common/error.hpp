#pragma once

#include <stdexcept>
#include <string>

namespace beat {

/// Failure conditions raised by the core library. Each maps onto one of the
/// coarse categories that the C API and the CLI report.
enum class Errc {
  SignalTooShort,
  UnsupportedWavelet,
  LengthMismatch,
  ShapeMismatch,
  EmptyTape,
  StatsMismatch,
  NonPositiveRatio,
  BranchCountMismatch,
  NonFiniteLoss,
  ParseError,
  MissingValue,
  SpecMismatch,
  SplitTooShort,
  EmptySplit,
  MissingHorizon,
  ConfigInvalid,
  CheckpointMismatch,
  Io,
};

enum class ErrorCategory { Config, Data, Numeric, Shape, Io };

ErrorCategory category_of(Errc code) noexcept;
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }
  // what() without the code prefix
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace beat
