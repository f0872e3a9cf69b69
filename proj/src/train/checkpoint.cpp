#include "train/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <map>

#include "common/error.hpp"

namespace beat::train {
namespace {

static_assert(std::endian::native == std::endian::little, "checkpoint I/O assumes a little-endian host");

template <class T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T take(std::istream& in, const std::string& path) {
  T v{};
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) throw Error(Errc::CheckpointMismatch, path + ": truncated checkpoint");
  return v;
}

std::string take_bytes(std::istream& in, std::uint64_t n, const std::string& path) {
  if (n > (1ull << 32)) throw Error(Errc::CheckpointMismatch, path + ": implausible field length");
  std::string s(n, '\0');
  if (n && !in.read(s.data(), static_cast<std::streamsize>(n))) {
    throw Error(Errc::CheckpointMismatch, path + ": truncated checkpoint");
  }
  return s;
}

}  // namespace

Checkpoint capture(model::ForecastModel& model, const std::string& config_text) {
  Checkpoint c;
  c.config_text = config_text;
  for (auto* p : model.parameters()) c.parameters.emplace_back(p->name, p->value);
  return c;
}

void write_checkpoint(const std::string& path, const Checkpoint& ckpt) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write checkpoint '" + path + "'");
  out.write(kCheckpointMagic, sizeof kCheckpointMagic);
  put<std::uint32_t>(out, kCheckpointVersion);
  put<std::uint64_t>(out, ckpt.config_text.size());
  out.write(ckpt.config_text.data(), static_cast<std::streamsize>(ckpt.config_text.size()));
  put<std::uint64_t>(out, ckpt.parameters.size());
  for (const auto& [name, value] : ckpt.parameters) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
    put<std::uint32_t>(out, 2);
    put<std::uint64_t>(out, static_cast<std::uint64_t>(value.rows()));
    put<std::uint64_t>(out, static_cast<std::uint64_t>(value.cols()));
    out.write(reinterpret_cast<const char*>(value.data()), static_cast<std::streamsize>(value.size() * sizeof(double)));
  }
  if (!out) throw Error(Errc::Io, "failed writing checkpoint '" + path + "'");
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open checkpoint '" + path + "'");
  char magic[8];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kCheckpointMagic, sizeof magic) != 0) {
    throw Error(Errc::CheckpointMismatch, path + ": not a checkpoint file");
  }
  const auto version = take<std::uint32_t>(in, path);
  if (version != kCheckpointVersion) {
    throw Error(Errc::CheckpointMismatch, path + ": unsupported checkpoint version " + std::to_string(version));
  }
  Checkpoint c;
  c.config_text = take_bytes(in, take<std::uint64_t>(in, path), path);
  const auto count = take<std::uint64_t>(in, path);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::string name = take_bytes(in, take<std::uint32_t>(in, path), path);
    const auto ndim = take<std::uint32_t>(in, path);
    if (ndim != 2) throw Error(Errc::CheckpointMismatch, path + ": parameter '" + name + "' has ndim " + std::to_string(ndim));
    const auto rows = take<std::uint64_t>(in, path);
    const auto cols = take<std::uint64_t>(in, path);
    if (rows * cols > (1ull << 28)) throw Error(Errc::CheckpointMismatch, path + ": implausible parameter size");
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    if (m.size() && !in.read(reinterpret_cast<char*>(m.data()), static_cast<std::streamsize>(m.size() * sizeof(double)))) {
      throw Error(Errc::CheckpointMismatch, path + ": truncated checkpoint");
    }
    c.parameters.emplace_back(std::move(name), std::move(m));
  }
  return c;
}

void load_into(model::ForecastModel& model, const Checkpoint& ckpt) {
  auto params = model.parameters();
  if (params.size() != ckpt.parameters.size()) {
    throw Error(Errc::CheckpointMismatch, "checkpoint holds " + std::to_string(ckpt.parameters.size()) +
                                              " parameters, model has " + std::to_string(params.size()));
  }
  std::map<std::string, const Matrix*> by_name;
  for (const auto& [name, value] : ckpt.parameters) by_name[name] = &value;
  for (auto* p : params) {
    auto it = by_name.find(p->name);
    if (it == by_name.end()) throw Error(Errc::CheckpointMismatch, "checkpoint lacks parameter '" + p->name + "'");
    const Matrix& v = *it->second;
    if (v.rows() != p->value.rows() || v.cols() != p->value.cols()) {
      throw Error(Errc::CheckpointMismatch, "parameter '" + p->name + "' is " + std::to_string(v.rows()) + "x" +
                                                std::to_string(v.cols()) + " in the checkpoint, " +
                                                std::to_string(p->value.rows()) + "x" +
                                                std::to_string(p->value.cols()) + " in the model");
    }
  }
  for (auto* p : params) p->value = *by_name[p->name];
}

}  // namespace beat::train
