#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ebitsim/optics.hpp"

namespace ebitsim {

// Netlist records:
//   {"kind":"beam_splitter","ports":[a,b],"theta":..,"phi":..}
//   {"kind":"phase_shifter","port":p,"phi":..}
//   {"kind":"attenuator","port":p,"t":..}

nlohmann::ordered_json element_to_json(const NetworkElement& e);
NetworkElement element_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::ordered_json netlist_to_json(const std::vector<NetworkElement>& elements);
std::vector<NetworkElement> netlist_from_json(const nlohmann::json& j,
                                              const std::string& path = "$");

std::vector<NetworkElement> parse_netlist(std::string_view text);

/// {"re": [[..]], "im": [[..]]}; "im" may be omitted for real matrices.
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& path = "$");
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);

}  // namespace ebitsim
