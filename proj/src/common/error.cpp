#include "common/error.hpp"

namespace beat {

ErrorCategory category_of(Errc code) noexcept {
  switch (code) {
    case Errc::UnsupportedWavelet:
    case Errc::ConfigInvalid:
    case Errc::CheckpointMismatch:
      return ErrorCategory::Config;
    case Errc::ParseError:
    case Errc::MissingValue:
    case Errc::SpecMismatch:
    case Errc::SplitTooShort:
    case Errc::EmptySplit:
    case Errc::MissingHorizon:
      return ErrorCategory::Data;
    case Errc::NonFiniteLoss:
    case Errc::NonPositiveRatio:
      return ErrorCategory::Numeric;
    case Errc::Io:
      return ErrorCategory::Io;
    default:
      return ErrorCategory::Shape;
  }
}

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::SignalTooShort: return "SignalTooShort";
    case Errc::UnsupportedWavelet: return "UnsupportedWavelet";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::EmptyTape: return "EmptyTape";
    case Errc::StatsMismatch: return "StatsMismatch";
    case Errc::NonPositiveRatio: return "NonPositiveRatio";
    case Errc::BranchCountMismatch: return "BranchCountMismatch";
    case Errc::NonFiniteLoss: return "NonFiniteLoss";
    case Errc::ParseError: return "ParseError";
    case Errc::MissingValue: return "MissingValue";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::SplitTooShort: return "SplitTooShort";
    case Errc::EmptySplit: return "EmptySplit";
    case Errc::MissingHorizon: return "MissingHorizon";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::CheckpointMismatch: return "CheckpointMismatch";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), message_(message) {}

}  // namespace beat
