#include "hylag/manifest.hpp"

#include <sstream>

namespace hylag {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

namespace {

std::string string_array(const std::vector<std::string>& items) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) os << ", ";
        os << '"' << json_escape(items[i]) << '"';
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string RunManifest::to_embedded_json() const {
    // wall_ms intentionally omitted: file bytes must depend only on the command
    std::ostringstream os;
    os << "{\"argv\": " << string_array(argv) << ", \"version\": \"" << json_escape(version)
       << "\", \"seed\": " << seed << ", \"threads\": " << threads
       << ", \"inputs\": " << string_array(inputs) << ", \"outputs\": " << string_array(outputs);
    if (!config_json.empty()) os << ", \"config\": " << config_json;
    os << "}";
    return os.str();
}

}  // namespace hylag
