#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace declab {

// Raised on malformed or inconsistent experiment configs; carries a
// line-anchored message. The CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat dotted-key = value text format, one experiment per file:
//   experiment = resolvent-q0
//   damping.gamma = 1.0
// '#' starts a comment; blank lines ignored.
class Config {
  public:
    static Config parse_string(const std::string& text, const std::string& name = "<config>");
    static Config parse_file(const std::string& path);

    std::string serialize() const; // sorted keys; parse(serialize()) round-trips

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    const std::string& name() const { return name_; }

    std::string require_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double require_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long require_int(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    std::vector<double> get_doubles(const std::string& key) const; // comma-separated

    // Validation: every present key must be in the accepted set.
    void restrict_keys(const std::set<std::string>& accepted) const;

    void set(const std::string& key, const std::string& value);

  private:
    std::string name_;
    std::map<std::string, std::string> kv_;
    std::map<std::string, int> line_;

    [[noreturn]] void fail(const std::string& key, const std::string& what) const;
};

} // namespace declab
