#pragma once

#include <iosfwd>
#include <string>

#include "sfanc/experiment.hpp"

namespace sfanc {

// Flat key-value config with [scene] / [kernel] / [control] / [run]
// sections. Parse errors carry the line number and field name.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(std::istream& in, const std::string& origin);

// Serializes the fully resolved geometry (explicit position lists), so an
// archived config re-parses to an identical in-memory config.
void write_config(std::ostream& out, const ExperimentConfig& cfg);
void write_config_file(const std::string& path, const ExperimentConfig& cfg);

}  // namespace sfanc
