#pragma once

#include <string>
#include <utility>
#include <vector>

#include "model/forecaster.hpp"

namespace beat::train {

inline constexpr char kCheckpointMagic[8] = {'B', 'E', 'A', 'T', 'C', 'K', 'P', 'T'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Parameter values plus the resolved configuration text they were trained
/// under. Byte layout is described in docs/FORMATS.md.
struct Checkpoint {
  std::string config_text;
  std::vector<std::pair<std::string, Matrix>> parameters;
};

Checkpoint capture(model::ForecastModel& model, const std::string& config_text);
void write_checkpoint(const std::string& path, const Checkpoint& ckpt);
Checkpoint read_checkpoint(const std::string& path);

/// Copies values into the model; names and shapes must match one to one
/// (CheckpointMismatch otherwise).
void load_into(model::ForecastModel& model, const Checkpoint& ckpt);

}  // namespace beat::train
