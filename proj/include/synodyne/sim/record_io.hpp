#pragma once

#include <filesystem>

#include "json.hpp"
#include "synodyne/sim/simulate.hpp"

namespace synodyne::sim {

// Raw-record dump: little-endian float64, channel-interleaved (frame by
// frame: ch0[k], ch1[k], ...), written to raw_path, plus a JSON sidecar at
// raw_path + ".json" describing the layout (dt, t0, channel names, frame
// count, dtype) merged with caller metadata (seed, params, ...). Caller keys
// never override the layout keys. Throws IoError on filesystem failure.
void write_record(const std::filesystem::path& raw_path, const TimeSeries& ts,
                  const nlohmann::json& metadata = nlohmann::json::object());

// Reads a dump written by write_record; the sidecar supplies the layout.
// Throws IoError when files are missing/corrupt or sizes disagree.
TimeSeries read_record(const std::filesystem::path& raw_path);

// The sidecar document itself.
nlohmann::json read_record_metadata(const std::filesystem::path& raw_path);

}  // namespace synodyne::sim
