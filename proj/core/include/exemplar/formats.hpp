#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exemplar/nn/tensor.hpp"
#include "exemplar/types.hpp"

namespace exemplar {

// ---------------------------------------------------------------------------
// PLY (ingest path). ASCII and binary_little_endian, float or double vertex
// x/y/z. Faces and extra properties are skipped; coordinates are narrowed to
// float32 on read to match the precision of everything downstream.
// ---------------------------------------------------------------------------

enum class PlyFormat { Ascii, BinaryLittleEndian };

PointCloud read_ply(const std::filesystem::path& path);
void write_ply(const PointCloud& cloud, const std::filesystem::path& path,
               PlyFormat format = PlyFormat::BinaryLittleEndian);

// ---------------------------------------------------------------------------
// PCF, the processed-cloud format: "PCF1", u32-LE point count, then N x 3
// float32-LE (x, y, z) in meters.
// ---------------------------------------------------------------------------

void write_pcf(const PointCloud& cloud, const std::filesystem::path& path);
PointCloud read_pcf(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// JSON metadata sidecar: everything of a ScanRecord except the cloud.
// ---------------------------------------------------------------------------

struct ScanMetadata {
  std::string id;
  Gender gender = Gender::Female;
  Race race = Race::White;
  std::optional<LandmarkSet> landmarks;
  std::map<std::string, double> factors;
  // Unknown top-level keys seen on read (key -> raw JSON), re-emitted on write.
  std::map<std::string, std::string> extra;
};

ScanMetadata metadata_of(const ScanRecord& record);
void write_metadata(const ScanMetadata& meta, const std::filesystem::path& path);
ScanMetadata read_metadata(const std::filesystem::path& path, bool strict = false);

// ---------------------------------------------------------------------------
// Latent-code table: CSV `id,z0,...,z{d-1},gender,race`, floats with 17
// significant digits so the round trip is exact.
// ---------------------------------------------------------------------------

struct LatentRow {
  std::string id;
  std::vector<double> z;
  Gender gender = Gender::Female;
  Race race = Race::White;
};

void write_latents(const std::vector<LatentRow>& rows, const std::filesystem::path& path);
std::vector<LatentRow> read_latents(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Model checkpoint: "VAE1", u32-LE tensor count; per tensor u16-LE name
// length + name, u8 rank, rank x u32-LE dims, row-major float32-LE payload;
// then a u32-LE-length-prefixed JSON config blob.
// ---------------------------------------------------------------------------

struct CheckpointConfig {
  std::size_t n_points = 0;
  std::size_t latent_dim = 0;
  double width_mult = 1.0;
  std::uint64_t seed = 0;
};

struct ModelCheckpoint {
  std::vector<std::pair<std::string, nn::TensorF>> tensors;  // write order preserved
  CheckpointConfig config;

  const nn::TensorF* find(const std::string& name) const {
    for (const auto& [n, t] : tensors)
      if (n == name) return &t;
    return nullptr;
  }
};

void write_checkpoint(const ModelCheckpoint& ckpt, const std::filesystem::path& path);
ModelCheckpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace exemplar
