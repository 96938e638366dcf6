#pragma once

#include <string>

#include "rpdo/bounds.hpp"
#include "rpdo/maximal.hpp"
#include "rpdo/symbols.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rpdo {

// Flat binary container: magic + header (dim, n, tag, key/value params
// as text) + row-major complex64 payload, with a JSON metadata sidecar
// at <path>.json. File-level roundtrip is bit-exact; values are stored
// in single precision.
void save_symbol(const Symbol& s, const std::string& path);
Symbol load_symbol(const std::string& path);

void write_band_table_csv(const std::vector<BandTableRow>& table,
                          const std::string& path);
void write_constants_csv(const std::vector<MaximalReport>& rows,
                         const std::string& path);

nlohmann::ordered_json bound_report_json(const BoundReport& rep);

}  // namespace rpdo
