#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ebitsim/entanglement.hpp"
#include "ebitsim/postselect.hpp"
#include "ebitsim/protocols.hpp"

namespace ebitsim {

/// Serializes with insertion-ordered keys and every double printed with 17
/// significant digits, so equal inputs give byte-identical output.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

std::string format_double(double x);

/// {"n": 3, "normalized": true, "re": [[..]], "im": [[..]]}
nlohmann::ordered_json amplitude_to_json(const BipartiteAmplitude& c);
BipartiteAmplitude amplitude_from_json(const nlohmann::json& j);

/// {"singular_values": [..], "lambda": [..], "entropy_ebits": x, "rank": r}
nlohmann::ordered_json schmidt_to_json(const SchmidtReport& r);

/// Largest amplitude matrix embedded in result JSON; bigger kernels are
/// summarized by their Schmidt report only.
inline constexpr Eigen::Index kMaxEmbeddedAmplitude = 32;

nlohmann::ordered_json result_to_json(const ProtocolResult& r, std::uint64_t seed);

inline constexpr const char* kCsvHeader =
    "protocol,n,sigma,delta,entropy_ebits,coincidence_weight,oracle_entropy_ebits,rel_err";

std::string result_to_csv_row(const ProtocolResult& r);
std::string results_to_csv(const std::vector<ProtocolResult>& rows);

/// One-line stdout summary.
std::string result_summary(const ProtocolResult& r);

}  // namespace ebitsim
