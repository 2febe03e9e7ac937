#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace noiserect {

// Ordered key = value record; insertion order is preserved so that
// parse(serialize(m)) == m byte-for-byte.
class RunManifest {
public:
    void set(const std::string& key, const std::string& value);
    void set_double(const std::string& key, double value);
    void set_int(const std::string& key, long long value);
    void set_uint(const std::string& key, unsigned long long value);

    std::optional<std::string> get(const std::string& key) const;
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

std::string serialize_manifest(const RunManifest& manifest);
RunManifest parse_manifest(const std::string& text);

// Shortest round-trip decimal form, deterministic across platforms.
std::string format_double(double value);
std::string format_double_list(const std::vector<double>& values);

}  // namespace noiserect
