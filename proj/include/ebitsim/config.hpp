#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ebitsim/protocols.hpp"

namespace ebitsim {

enum class OutputFormat { Json, Csv };

struct SweepSpec {
  std::string parameter;
  std::vector<nlohmann::json> values;
};

/// Validated experiment description. `protocol_json` is kept so sweeps can
/// substitute one field and re-validate.
struct ExperimentConfig {
  ProtocolSpec protocol;
  nlohmann::json protocol_json;
  std::string output_path;
  OutputFormat format = OutputFormat::Json;
  std::optional<SweepSpec> sweep;
};

/// Strict parse: unknown keys fail. Errors are ErrorKind::Config with a
/// JSON path prefix, e.g. "$.protocol.n: n out of range [2,12]".
ExperimentConfig parse_config(std::string_view text);

ProtocolSpec parse_protocol(const nlohmann::json& j, const std::string& path = "$.protocol");

/// One spec per row: the protocol itself, or one per sweep value.
std::vector<ProtocolSpec> run_plan(const ExperimentConfig& config);

}  // namespace ebitsim
