#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holo/complex_util.hpp"
#include "holo/surfaces.hpp"

namespace holo {

/// Disk to draw sample points from. The first emitted row is always the
/// center itself, which makes single rows of the table predictable.
struct SamplingConfig {
  Cx center{0.0};
  double radius = 5.0;
  int count = 200;
  std::uint64_t seed = 20240801;
};

struct OutputConfig {
  std::string artifact = "artifact.json";
  std::string report = "report.txt";
  std::string samples = "samples.csv";
};

/// Full job description as read from a config document.
struct JobConfig {
  SurfaceModel surface{SphereModel{}};
  int truncation = 0;
  std::vector<std::string> checks;  // empty runs all
  std::uint64_t seed = 20240801;
  std::size_t probes = 2000;
  SamplingConfig sampling;
  OutputConfig output;
  /// Deliberate fault injection for exercising the rejection paths:
  /// "", "interpolant_offset", "constant_map", "fullfiber_target_collide".
  std::string tamper;
};

/// Parses the JSON job document. Throws ConfigError on malformed input,
/// unknown families, or unknown fields that would silently change meaning.
JobConfig parse_config(const std::string& text);

/// Canonical serialization; parse(serialize(parse(t))) == parse(t) and the
/// serialized form is a fixed point of the round trip.
std::string serialize_config(const JobConfig& config);

}  // namespace holo
