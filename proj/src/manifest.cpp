#include "noiserect/manifest.hpp"

#include <charconv>
#include <sstream>

#include "noiserect/error.hpp"

namespace noiserect {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_double_list(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ' ';
        out += format_double(values[i]);
    }
    return out;
}

void RunManifest::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    entries_.emplace_back(key, value);
}

void RunManifest::set_double(const std::string& key, double value) {
    set(key, format_double(value));
}

void RunManifest::set_int(const std::string& key, long long value) {
    set(key, std::to_string(value));
}

void RunManifest::set_uint(const std::string& key, unsigned long long value) {
    set(key, std::to_string(value));
}

std::optional<std::string> RunManifest::get(const std::string& key) const {
    for (const auto& [k, v] : entries_) {
        if (k == key) return v;
    }
    return std::nullopt;
}

std::string serialize_manifest(const RunManifest& manifest) {
    std::string out;
    for (const auto& [k, v] : manifest.entries()) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

RunManifest parse_manifest(const std::string& text) {
    RunManifest manifest;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t sep = line.find(" = ");
        if (sep == std::string::npos) {
            throw Error::io("manifest: malformed line '" + line + "'");
        }
        manifest.set(line.substr(0, sep), line.substr(sep + 3));
    }
    return manifest;
}

}  // namespace noiserect
