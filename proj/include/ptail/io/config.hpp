#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

namespace ptail::io {

// Flat key = value grammar with [section] headers and '#' comments. Values
// are kept as trimmed strings; typed access below.
struct ConfigFile {
    std::map<std::string, std::map<std::string, std::string>> sections;

    bool has(const std::string& section, const std::string& key) const;
    const std::map<std::string, std::string>& section(const std::string& name) const;
};

ConfigFile parse_config(std::istream& in);
ConfigFile parse_config_file(const std::string& path);

double to_double(const std::string& key, const std::string& value);
long long to_int(const std::string& key, const std::string& value);
std::vector<std::string> split_list(const std::string& value);  // comma-separated

}  // namespace ptail::io
