#include "ebitsim/netlist.hpp"

#include <set>

namespace ebitsim {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::Config, path + ": " + msg);
}

void only_keys(const json& j, const std::set<std::string>& allowed,
               const std::string& path) {
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) bad(path + "." + key, "unknown key");
  }
}

const json& need(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) bad(path + "." + key, "missing required field");
  return *it;
}

double need_number(const json& j, const char* key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_number()) bad(path + "." + key, "expected a number");
  return v.get<double>();
}

int need_port(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer port index");
  return v.get<int>();
}

}  // namespace

ordered_json element_to_json(const NetworkElement& e) {
  ordered_json j;
  std::visit(
      [&](const auto& el) {
        using T = std::decay_t<decltype(el)>;
        if constexpr (std::is_same_v<T, BeamSplitter>) {
          j["kind"] = "beam_splitter";
          j["ports"] = {el.port_a, el.port_b};
          j["theta"] = el.theta;
          j["phi"] = el.phi;
        } else if constexpr (std::is_same_v<T, PhaseShifter>) {
          j["kind"] = "phase_shifter";
          j["port"] = el.port;
          j["phi"] = el.phi;
        } else {
          j["kind"] = "attenuator";
          j["port"] = el.port;
          j["t"] = el.t;
        }
      },
      e);
  return j;
}

NetworkElement element_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an element object");
  const json& kind = need(j, "kind", path);
  if (!kind.is_string()) bad(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "beam_splitter") {
    only_keys(j, {"kind", "ports", "theta", "phi"}, path);
    const json& ports = need(j, "ports", path);
    if (!ports.is_array() || ports.size() != 2) bad(path + ".ports", "expected [a, b]");
    return BeamSplitter{need_port(ports[0], path + ".ports[0]"),
                        need_port(ports[1], path + ".ports[1]"),
                        need_number(j, "theta", path), need_number(j, "phi", path)};
  }
  if (k == "phase_shifter") {
    only_keys(j, {"kind", "port", "phi"}, path);
    return PhaseShifter{need_port(need(j, "port", path), path + ".port"),
                        need_number(j, "phi", path)};
  }
  if (k == "attenuator") {
    only_keys(j, {"kind", "port", "t"}, path);
    const double t = need_number(j, "t", path);
    if (!(t >= 0.0 && t <= 1.0)) bad(path + ".t", "amplitude factor must lie in [0, 1]");
    return Attenuator{need_port(need(j, "port", path), path + ".port"), t};
  }
  bad(path + ".kind", "unknown element kind '" + k + "'");
}

ordered_json netlist_to_json(const std::vector<NetworkElement>& elements) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : elements) arr.push_back(element_to_json(e));
  return arr;
}

std::vector<NetworkElement> netlist_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of network elements");
  std::vector<NetworkElement> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(element_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<NetworkElement> parse_netlist(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("$", "invalid JSON");
  return netlist_from_json(j);
}

ComplexMatrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected {\"re\": [[..]], \"im\": [[..]]}");
  only_keys(j, {"re", "im", "n", "normalized"}, path);
  auto read = [&](const json& rows, const std::string& p) {
    if (!rows.is_array() || rows.empty()) bad(p, "expected a non-empty array of rows");
    const size_t nr = rows.size();
    if (!rows[0].is_array()) bad(p + "[0]", "expected a row array");
    const size_t nc = rows[0].size();
    Eigen::MatrixXd m(nr, nc);
    for (size_t r = 0; r < nr; ++r) {
      const std::string rp = p + "[" + std::to_string(r) + "]";
      if (!rows[r].is_array() || rows[r].size() != nc) bad(rp, "ragged matrix row");
      for (size_t c = 0; c < nc; ++c) {
        if (!rows[r][c].is_number()) bad(rp + "[" + std::to_string(c) + "]", "expected a number");
        m(r, c) = rows[r][c].get<double>();
      }
    }
    return m;
  };
  const Eigen::MatrixXd re = read(need(j, "re", path), path + ".re");
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(re.rows(), re.cols());
  if (auto it = j.find("im"); it != j.end()) {
    im = read(*it, path + ".im");
    if (im.rows() != re.rows() || im.cols() != re.cols())
      bad(path + ".im", "shape differs from re");
  }
  ComplexMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json rr = ordered_json::array();
    ordered_json ii = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  ordered_json j;
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

}  // namespace ebitsim
