#include "synodyne/sim/record_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "synodyne/errors.hpp"

namespace synodyne::sim {

namespace {

constexpr const char* kSchema = "synodyne.record.v1";

std::uint64_t byteswap64(std::uint64_t v) {
    std::uint64_t out = 0;
    for (int i = 0; i < 8; ++i) out = (out << 8) | ((v >> (8 * i)) & 0xffULL);
    return out;
}

std::uint64_t to_le_bits(double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    if constexpr (std::endian::native == std::endian::big) bits = byteswap64(bits);
    return bits;
}

double from_le_bits(std::uint64_t bits) {
    if constexpr (std::endian::native == std::endian::big) bits = byteswap64(bits);
    return std::bit_cast<double>(bits);
}

std::filesystem::path sidecar_path(const std::filesystem::path& raw_path) {
    std::filesystem::path p = raw_path;
    p += ".json";
    return p;
}

}  // namespace

void write_record(const std::filesystem::path& raw_path, const TimeSeries& ts,
                  const nlohmann::json& metadata) {
    const std::size_t frames = ts.frames();
    const std::size_t n_ch = ts.names.size();
    if (n_ch == 0 || ts.data.size() != n_ch) throw InvalidArgument("record has no channels");
    for (const std::vector<double>& ch : ts.data) {
        if (ch.size() != frames) throw InvalidArgument("record channels differ in length");
    }

    std::ofstream raw(raw_path, std::ios::binary | std::ios::trunc);
    if (!raw) throw IoError("cannot open '" + raw_path.string() + "' for writing");
    std::vector<std::uint64_t> frame(n_ch);
    for (std::size_t k = 0; k < frames; ++k) {
        for (std::size_t c = 0; c < n_ch; ++c) frame[c] = to_le_bits(ts.data[c][k]);
        raw.write(reinterpret_cast<const char*>(frame.data()),
                  static_cast<std::streamsize>(n_ch * sizeof(std::uint64_t)));
    }
    raw.flush();
    if (!raw) throw IoError("short write to '" + raw_path.string() + "'");

    nlohmann::json side = metadata.is_object() ? metadata : nlohmann::json::object();
    side["schema"] = kSchema;
    side["dt"] = ts.dt;
    side["t0"] = ts.t0;
    side["n_frames"] = frames;
    side["channels"] = ts.names;
    side["dtype"] = "float64";
    side["byte_order"] = "little";
    side["interleave"] = "channel";

    std::ofstream meta(sidecar_path(raw_path), std::ios::trunc);
    if (!meta) throw IoError("cannot open sidecar for '" + raw_path.string() + "'");
    meta << side.dump(2) << '\n';
    meta.flush();
    if (!meta) throw IoError("short write to sidecar of '" + raw_path.string() + "'");
}

nlohmann::json read_record_metadata(const std::filesystem::path& raw_path) {
    std::ifstream meta(sidecar_path(raw_path));
    if (!meta) throw IoError("cannot open sidecar for '" + raw_path.string() + "'");
    nlohmann::json side;
    try {
        meta >> side;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed sidecar for '" + raw_path.string() + "': " + e.what());
    }
    return side;
}

TimeSeries read_record(const std::filesystem::path& raw_path) {
    const nlohmann::json side = read_record_metadata(raw_path);
    try {
        if (side.at("schema").get<std::string>() != kSchema) {
            throw IoError("unknown record schema in sidecar");
        }
        if (side.at("dtype").get<std::string>() != "float64" ||
            side.at("byte_order").get<std::string>() != "little" ||
            side.at("interleave").get<std::string>() != "channel") {
            throw IoError("unsupported record layout in sidecar");
        }

        TimeSeries ts;
        ts.dt = side.at("dt").get<double>();
        ts.t0 = side.at("t0").get<double>();
        ts.names = side.at("channels").get<std::vector<std::string>>();
        const auto frames = side.at("n_frames").get<std::size_t>();
        const std::size_t n_ch = ts.names.size();
        if (n_ch == 0) throw IoError("sidecar lists no channels");

        std::ifstream raw(raw_path, std::ios::binary);
        if (!raw) throw IoError("cannot open '" + raw_path.string() + "'");
        ts.data.assign(n_ch, std::vector<double>(frames));
        std::vector<std::uint64_t> frame(n_ch);
        for (std::size_t k = 0; k < frames; ++k) {
            raw.read(reinterpret_cast<char*>(frame.data()),
                     static_cast<std::streamsize>(n_ch * sizeof(std::uint64_t)));
            if (!raw) throw IoError("record '" + raw_path.string() + "' truncated");
            for (std::size_t c = 0; c < n_ch; ++c) ts.data[c][k] = from_le_bits(frame[c]);
        }
        return ts;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed sidecar for '" + raw_path.string() + "': " + e.what());
    }
}

}  // namespace synodyne::sim
