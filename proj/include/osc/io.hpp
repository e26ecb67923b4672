#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "osc/analysis.hpp"
#include "osc/signal.hpp"
#include "osc/sims.hpp"

namespace osc {

inline constexpr const char* kLibraryVersion = "1.0.0";
inline constexpr char kBinaryMagic[4] = {'O', 'S', 'C', '1'};

using json = nlohmann::json;

json dictionary_to_json(const SignalDictionary& dict, const json& config = json::object());
SignalDictionary dictionary_from_json(const json& j);

void write_dictionary_json(const std::string& path, const SignalDictionary& dict,
                           const json& config = json::object());
/// Compact binary: magic "OSC1", u32 p, u32 kind, u64 count, then per signal
/// p interleaved (re, im) little-endian doubles, row-major.
void write_dictionary_binary(const std::string& path, const SignalDictionary& dict);

/// Sniffs the format from the leading bytes.
SignalDictionary read_dictionary(const std::string& path);

json report_to_json(const CorrelationReport& report);
json sweep_to_json(const std::vector<CdmaSweepRow>& rows);

}  // namespace osc
