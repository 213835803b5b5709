#pragma once

#include <iosfwd>
#include <string>

#include "holo/config.hpp"
#include "holo/embedder.hpp"

namespace holo {

enum class JobCommand { Construct, Verify, Sample, Export };

/// Maps a subcommand name to its JobCommand; throws ConfigError otherwise.
JobCommand parse_command(const std::string& name);

/// Applies the named fault injection to a finished artifact; "" is a no-op.
void apply_tamper(EmbeddingArtifact& artifact, const std::string& tamper);

/// Renders the artifact (map data, columns, extension entries, audit, and
/// family bookkeeping) as a JSON document.
std::string artifact_to_json(const EmbeddingArtifact& artifact);

/// Point-cloud table over the sampling disk: header row then one row per
/// point as sheet id, base re/im, and both image coordinates re/im. The
/// first data row is the disk center, the rest are seeded draws.
std::string sample_table(const EmbeddingArtifact& artifact, const SamplingConfig& sampling);

/// Runs one job: builds the model's artifact, applies any tamper, and
/// writes the files the command calls for under out_dir ("" = cwd).
///   construct: artifact JSON          verify: verification report
///   sample:    point-cloud table      export: all three
/// Returns 0 on success, 1 when a verification report fails, 2 on
/// configuration or construction errors (message goes to err).
int run_job(const JobConfig& config, JobCommand command, const std::string& out_dir,
            std::ostream& err);

}  // namespace holo
