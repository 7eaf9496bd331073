#include "ebitsim/runner.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ebitsim/netlist.hpp"
#include "ebitsim/parallel.hpp"
#include "ebitsim/report_io.hpp"

namespace ebitsim {

std::vector<ProtocolResult> execute(const ExperimentConfig& config, int threads) {
  const std::vector<ProtocolSpec> plan = run_plan(config);
  std::vector<ProtocolResult> results(plan.size());
  parallel_for(
      plan.size(), [&](size_t i) { results[i] = run_protocol(plan[i]); }, threads);
  for (const auto& r : results) {
    if (r.rel_err && *r.rel_err > kGridUnderResolvedRelErr) {
      std::ostringstream os;
      os << "grid under-resolved: etpd sigma=" << *r.sigma << " delta=" << *r.delta
         << " rel_err=" << *r.rel_err << "; suggested extent >= "
         << kDefaultExtentFactor * std::max(*r.sigma, *r.delta) << " and more points";
      fail_numerical(os.str());
    }
  }
  return results;
}

std::string render(const ExperimentConfig& config, const std::vector<ProtocolResult>& results) {
  if (config.format == OutputFormat::Csv) return results_to_csv(results);
  const std::vector<ProtocolSpec> plan = run_plan(config);
  nlohmann::ordered_json doc;
  doc["protocol"] = protocol_name(config.protocol);
  if (config.sweep) doc["sweep_parameter"] = config.sweep->parameter;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (size_t i = 0; i < results.size(); ++i) rows.push_back(result_to_json(results[i], plan[i].seed));
  doc["rows"] = std::move(rows);
  return dump_json(doc);
}

int run_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& err,
                   int threads) {
  std::vector<ProtocolResult> results;
  try {
    results = execute(config, threads);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Numerical ? kExitNumericalFailure : kExitConfigError;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << config.output_path << " for writing\n";
    return kExitConfigError;
  }
  file << render(config, results);
  if (!file.flush()) {
    err << "error: failed writing " << config.output_path << '\n';
    return kExitConfigError;
  }
  for (const auto& r : results) out << result_summary(r) << '\n';
  return kExitOk;
}

int run_config_text(const std::string& text, bool require_sweep, std::ostream& out,
                    std::ostream& err, int threads) {
  ExperimentConfig cfg;
  try {
    cfg = parse_config(text);
  } catch (const Error& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  if (require_sweep && !cfg.sweep) {
    err << "config error: $.sweep: missing required field for 'sweep'\n";
    return kExitConfigError;
  }
  return run_experiment(cfg, out, err, threads);
}

int decompose_text(const std::string& text, std::ostream& out, std::ostream& err) {
  try {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorKind::Config, "$: invalid JSON");
    const ComplexMatrix u = matrix_from_json(j);
    out << dump_json(netlist_to_json(reck_decompose(u)));
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Numerical ? kExitNumericalFailure : kExitConfigError;
  }
}

}  // namespace ebitsim
