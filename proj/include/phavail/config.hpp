#pragma once

#include <filesystem>
#include <string>

#include "phavail/system.hpp"

namespace phavail {

/// Time-grid options from the config's optional "analysis" block.
struct AnalysisOptions {
  double t_start = 0.0;
  double t_stop = 500.0;
  int points = 501;
  bool log_spacing = false;
};

struct ModelConfig {
  SystemModel model;
  AnalysisOptions analysis;
};

/// Parses and validates a JSON model document. Diagnostics name the
/// offending field (UnknownField, InvalidRate, UnknownLaw) or location
/// (SyntaxError with line number).
ModelConfig parse_model_config(const std::string& text);

/// parse_model_config on a file's contents.
ModelConfig load_model_config(const std::filesystem::path& path);

}  // namespace phavail
