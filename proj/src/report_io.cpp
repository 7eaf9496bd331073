#include "ebitsim/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ebitsim/netlist.hpp"

namespace ebitsim {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // keep it a JSON number that reads back as floating point
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

namespace {

void dump(const ordered_json& j, int indent, int depth, std::string& out) {
  const auto pad = [&](int d) {
    if (indent > 0) {
      out += '\n';
      out.append(static_cast<size_t>(d * indent), ' ');
    }
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        out += ordered_json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        dump(it.value(), indent, depth + 1, out);
      }
      pad(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // numeric rows stay on one line
      const bool flat = std::all_of(j.begin(), j.end(), [](const auto& v) { return v.is_primitive(); });
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat && indent > 0 ? ", " : ",";
        first = false;
        if (!flat) pad(depth + 1);
        dump(v, indent, depth + 1, out);
      }
      if (!flat) pad(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

ordered_json vector_json(const RealVector& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string dump_json(const ordered_json& j, int indent) {
  std::string out;
  dump(j, indent, 0, out);
  out += '\n';
  return out;
}

ordered_json amplitude_to_json(const BipartiteAmplitude& c) {
  ordered_json j;
  j["n"] = c.matrix.rows();
  j["normalized"] = c.normalized;
  const ordered_json m = matrix_to_json(c.matrix);
  j["re"] = m["re"];
  j["im"] = m["im"];
  return j;
}

BipartiteAmplitude amplitude_from_json(const json& j) {
  BipartiteAmplitude c;
  c.matrix = matrix_from_json(j);
  if (auto it = j.find("n"); it != j.end() && it->get<Eigen::Index>() != c.matrix.rows())
    throw Error(ErrorKind::Config, "$.n: does not match matrix size");
  c.normalized = j.value("normalized", false);
  return c;
}

ordered_json schmidt_to_json(const SchmidtReport& r) {
  ordered_json j;
  j["singular_values"] = vector_json(r.singular_values);
  j["lambda"] = vector_json(r.schmidt_coefficients);
  j["entropy_ebits"] = r.entropy_ebits;
  j["rank"] = r.numerical_rank;
  return j;
}

ordered_json result_to_json(const ProtocolResult& r, std::uint64_t seed) {
  ordered_json j;
  j["protocol"] = r.protocol;
  j["n"] = r.n;
  j["seed"] = seed;
  if (r.sigma) j["sigma"] = *r.sigma;
  if (r.delta) j["delta"] = *r.delta;
  j["entropy_ebits"] = r.report.entropy_ebits;
  j["coincidence_weight"] = r.coincidence_weight;
  if (r.oracle_entropy_ebits) j["oracle_entropy_ebits"] = *r.oracle_entropy_ebits;
  if (r.rel_err) j["rel_err"] = *r.rel_err;
  j["schmidt"] = schmidt_to_json(r.report);
  if (r.amplitude.matrix.rows() <= kMaxEmbeddedAmplitude) j["amplitude"] = amplitude_to_json(r.amplitude);
  return j;
}

std::string result_to_csv_row(const ProtocolResult& r) {
  std::ostringstream os;
  os << r.protocol << ',' << r.n << ',' << opt(r.sigma) << ',' << opt(r.delta) << ','
     << format_double(r.report.entropy_ebits) << ',' << format_double(r.coincidence_weight) << ','
     << opt(r.oracle_entropy_ebits) << ',' << opt(r.rel_err);
  return os.str();
}

std::string results_to_csv(const std::vector<ProtocolResult>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += result_to_csv_row(r);
    out += '\n';
  }
  return out;
}

std::string result_summary(const ProtocolResult& r) {
  std::ostringstream os;
  os << "protocol=" << r.protocol << " n=" << r.n
     << " entropy_ebits=" << format_double(r.report.entropy_ebits)
     << " coincidence_weight=" << format_double(r.coincidence_weight);
  return os.str();
}

}  // namespace ebitsim
