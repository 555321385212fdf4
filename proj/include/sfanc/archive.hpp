#pragma once

#include <string>

#include "sfanc/experiment.hpp"

namespace sfanc {

// On-disk result archive: manifest.json + archived config + one delimited
// table per trajectory / field map / final filter. Numbers are written
// with 17 significant digits so downstream plotting is lossless.
struct ArchiveSummary {
    int failures = 0;
    std::string manifest_path;
};

ArchiveSummary write_run_archive(const std::string& out_dir,
                                 const RunResult& result);

// Normalized power map table for one (frequency, algorithm) result:
// grid rows plus marker rows for error mics, scatterer, and the region
// boundary.
void write_fieldmap_table(const std::string& path, const SceneConfig& scene,
                          const FrequencyResult& res);

}  // namespace sfanc
