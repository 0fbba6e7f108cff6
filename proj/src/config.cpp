#include "declab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace declab {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

Config Config::parse_string(const std::string& text, const std::string& name) {
    Config c;
    c.name_ = name;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(name + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(name + ":" + std::to_string(lineno) +
                              ": empty key or value");
        if (c.kv_.count(key))
            throw ConfigError(name + ":" + std::to_string(lineno) + ": duplicate key '" +
                              key + "'");
        c.kv_[key] = value;
        c.line_[key] = lineno;
    }
    return c;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ":0: cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

std::string Config::serialize() const {
    std::ostringstream out;
    for (const auto& [k, v] : kv_) out << k << " = " << v << "\n";
    return out.str();
}

void Config::fail(const std::string& key, const std::string& what) const {
    const auto it = line_.find(key);
    const int ln = it == line_.end() ? 1 : it->second;
    throw ConfigError(name_ + ":" + std::to_string(ln) + ": " + what + " '" + key + "'");
}

std::string Config::require_string(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) fail(key, "missing required key");
    return it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

double Config::require_double(const std::string& key) const {
    const std::string s = require_string(key);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') fail(key, "not a number at key");
    return v;
}

double Config::get_double(const std::string& key, double fallback) const {
    return has(key) ? require_double(key) : fallback;
}

long Config::require_int(const std::string& key) const {
    const std::string s = require_string(key);
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0') fail(key, "not an integer at key");
    return v;
}

long Config::get_int(const std::string& key, long fallback) const {
    return has(key) ? require_int(key) : fallback;
}

std::vector<double> Config::get_doubles(const std::string& key) const {
    std::vector<double> out;
    std::string s = require_string(key);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    double v;
    while (in >> v) out.push_back(v);
    if (out.empty()) fail(key, "expected a comma-separated number list at key");
    return out;
}

void Config::restrict_keys(const std::set<std::string>& accepted) const {
    for (const auto& [k, v] : kv_)
        if (!accepted.count(k)) fail(k, "unknown key");
}

void Config::set(const std::string& key, const std::string& value) {
    kv_[key] = value;
    if (!line_.count(key)) line_[key] = 0;
}

} // namespace declab
