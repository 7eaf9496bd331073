#include "ebitsim/config.hpp"

#include <set>

#include "ebitsim/netlist.hpp"

namespace ebitsim {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::Config, path + ": " + msg);
}

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& path) {
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) bad(path + "." + key, "unknown key");
  }
}

const std::set<std::string>& fields_of(const std::string& kind) {
  static const std::set<std::string> single{"kind", "seed", "dim", "orthogonal"};
  static const std::set<std::string> two{"kind", "seed", "network", "symmetric"};
  static const std::set<std::string> sym{"kind", "seed", "n"};
  static const std::set<std::string> sat{"kind", "seed", "n", "filter", "detection"};
  static const std::set<std::string> etpd{"kind",   "seed",  "sigma",     "delta",
                                          "points", "extent", "acceptance"};
  if (kind == "single_detection") return single;
  if (kind == "two_photon_two_detector") return two;
  if (kind == "symmetric_n") return sym;
  if (kind == "saturating_n") return sat;
  if (kind == "etpd") return etpd;
  bad("$.protocol.kind", "unknown protocol kind '" + kind + "'");
}

int get_int(const json& j, const char* key, int fallback, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer()) bad(path + "." + key, "expected an integer");
  return it->get<int>();
}

double get_double(const json& j, const char* key, double fallback, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number()) bad(path + "." + key, "expected a number");
  return it->get<double>();
}

bool get_bool(const json& j, const char* key, bool fallback, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) bad(path + "." + key, "expected true or false");
  return it->get<bool>();
}

std::string get_string(const json& j, const char* key, const std::string& fallback,
                       const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_string()) bad(path + "." + key, "expected a string");
  return it->get<std::string>();
}

int get_n(const json& j, const std::string& path) {
  auto it = j.find("n");
  if (it == j.end()) bad(path + ".n", "missing required field");
  if (!it->is_number_integer()) bad(path + ".n", "expected an integer");
  const int n = it->get<int>();
  if (n < kMinProtocolN || n > kMaxProtocolN) bad(path + ".n", "n out of range [2,12]");
  return n;
}

}  // namespace

ProtocolSpec parse_protocol(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end()) bad(path + ".kind", "missing required field");
  if (!kind_it->is_string()) bad(path + ".kind", "expected a string");
  const std::string kind = kind_it->get<std::string>();
  only_keys(j, fields_of(kind), path);

  ProtocolSpec spec;
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) bad(path + ".seed", "expected a non-negative integer");
    spec.seed = it->get<std::uint64_t>();
  }

  if (kind == "single_detection") {
    SingleDetectionSpec s;
    s.dim = get_int(j, "dim", s.dim, path);
    s.orthogonal = get_bool(j, "orthogonal", s.orthogonal, path);
    if (s.dim < 2 || s.dim > 4096) bad(path + ".dim", "dim out of range [2,4096]");
    if (s.orthogonal && s.dim < 3) bad(path + ".dim", "orthogonal case needs dim >= 3");
    spec.kind = s;
  } else if (kind == "two_photon_two_detector") {
    TwoPhotonSpec s;
    s.symmetric = get_bool(j, "symmetric", s.symmetric, path);
    if (auto it = j.find("network"); it != j.end()) {
      s.network = netlist_from_json(*it, path + ".network");
      try {
        compose(*s.network, PortBasis(2));
      } catch (const Error& e) {
        bad(path + ".network", e.what());
      }
    }
    spec.kind = std::move(s);
  } else if (kind == "symmetric_n") {
    spec.kind = SymmetricSpec{get_n(j, path)};
  } else if (kind == "saturating_n") {
    SaturatingSpec s;
    s.n = get_n(j, path);
    const std::string filter = get_string(j, "filter", "per_photon", path);
    if (filter == "per_photon") {
      s.filter = FilterStrength::PerPhoton;
    } else if (filter == "per_component") {
      s.filter = FilterStrength::PerComponent;
    } else {
      bad(path + ".filter", "expected \"per_photon\" or \"per_component\"");
    }
    const std::string det = get_string(j, "detection", "original_ports", path);
    if (det == "original_ports") {
      s.detection = Detection::OriginalPorts;
    } else if (det == "collector_basis") {
      s.detection = Detection::CollectorBasis;
    } else {
      bad(path + ".detection", "expected \"original_ports\" or \"collector_basis\"");
    }
    spec.kind = s;
  } else {
    EtpdSpec s;
    s.sigma = get_double(j, "sigma", s.sigma, path);
    s.delta = get_double(j, "delta", s.delta, path);
    s.points = get_int(j, "points", s.points, path);
    if (j.contains("extent")) s.extent = get_double(j, "extent", 0.0, path);
    const std::string acc = get_string(j, "acceptance", "sum_gaussian", path);
    if (acc == "delta_sum") {
      s.delta_sum = true;
    } else if (acc != "sum_gaussian") {
      bad(path + ".acceptance", "expected \"sum_gaussian\" or \"delta_sum\"");
    }
    if (!(s.sigma > 0.0)) bad(path + ".sigma", "sigma must be positive");
    if (!(s.delta > 0.0)) bad(path + ".delta", "delta must be positive");
    if (s.points < 33 || s.points % 2 == 0 || s.points > 4097)
      bad(path + ".points", "points must be odd and in [33,4097]");
    if (s.extent && !(*s.extent > 0.0)) bad(path + ".extent", "extent must be positive");
    spec.kind = s;
  }
  return spec;
}

ExperimentConfig parse_config(std::string_view text) {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("$", "invalid JSON");
  if (!j.is_object()) bad("$", "expected an object");
  only_keys(j, {"protocol", "output_path", "format", "sweep"}, "$");

  ExperimentConfig cfg;
  auto proto = j.find("protocol");
  if (proto == j.end()) bad("$.protocol", "missing required field");
  cfg.protocol = parse_protocol(*proto);
  cfg.protocol_json = *proto;

  auto out = j.find("output_path");
  if (out == j.end()) bad("$.output_path", "missing required field");
  if (!out->is_string() || out->get<std::string>().empty())
    bad("$.output_path", "expected a non-empty string");
  cfg.output_path = out->get<std::string>();

  const std::string fmt = get_string(j, "format", "json", "$");
  if (fmt == "json") {
    cfg.format = OutputFormat::Json;
  } else if (fmt == "csv") {
    cfg.format = OutputFormat::Csv;
  } else {
    bad("$.format", "expected \"json\" or \"csv\"");
  }

  if (auto sw = j.find("sweep"); sw != j.end()) {
    if (!sw->is_object()) bad("$.sweep", "expected an object");
    only_keys(*sw, {"parameter", "values"}, "$.sweep");
    auto param = sw->find("parameter");
    if (param == sw->end()) bad("$.sweep.parameter", "missing required field");
    if (!param->is_string()) bad("$.sweep.parameter", "expected a string");
    SweepSpec sweep;
    sweep.parameter = param->get<std::string>();
    const std::string kind = cfg.protocol_json.at("kind").get<std::string>();
    if (sweep.parameter == "kind" || !fields_of(kind).count(sweep.parameter))
      bad("$.sweep.parameter", "'" + sweep.parameter + "' is not a field of " + kind);
    auto values = sw->find("values");
    if (values == sw->end()) bad("$.sweep.values", "missing required field");
    if (!values->is_array() || values->empty()) bad("$.sweep.values", "expected a non-empty array");
    sweep.values.assign(values->begin(), values->end());
    cfg.sweep = std::move(sweep);
    // validate every row now so a bad value fails before any work runs
    run_plan(cfg);
  }
  return cfg;
}

std::vector<ProtocolSpec> run_plan(const ExperimentConfig& config) {
  if (!config.sweep) return {config.protocol};
  std::vector<ProtocolSpec> plan;
  plan.reserve(config.sweep->values.size());
  for (size_t i = 0; i < config.sweep->values.size(); ++i) {
    json row = config.protocol_json;
    row[config.sweep->parameter] = config.sweep->values[i];
    try {
      plan.push_back(parse_protocol(row));
    } catch (const Error& e) {
      std::string msg = e.what();
      const std::string prefix = "$.protocol." + config.sweep->parameter + ": ";
      if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
      bad("$.sweep.values[" + std::to_string(i) + "]", msg);
    }
  }
  return plan;
}

}  // namespace ebitsim
