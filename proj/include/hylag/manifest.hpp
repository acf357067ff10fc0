#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hylag {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Provenance of one CLI run. The serialized form embedded in output
// files omits wall_ms so that re-running the same command reproduces
// output bytes exactly; timings are reported on stderr instead.
struct RunManifest {
    std::vector<std::string> argv;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string version = kArtifactVersion;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string config_json;  // resolved solver/config snapshot, "" if none
    double wall_ms = 0.0;     // volatile, never serialized

    std::string to_embedded_json() const;
};

std::string json_escape(const std::string& s);

}  // namespace hylag
