#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace ivm {

// Ordered key=value bag; later assignments to a key win, which implements the
// flags-over-file precedence by simple concatenation.
class ConfigMap {
public:
    void set(const std::string& key, const std::string& value);
    const std::string* find(const std::string& key) const;
    const std::vector<std::pair<std::string, std::string>>& entries() const {
        return entries_;
    }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

// key=value lines; '#' starts a comment, blank lines are skipped.
ConfigMap parse_config_text(const std::string& text);

// Typed access with per-command key whitelisting.  Every getter names the key
// in its error message; finish() rejects unknown keys, listing the valid ones.
class ConfigReader {
public:
    ConfigReader(const ConfigMap& map, std::string command);

    long get_long(const std::string& key, long def);
    long require_long(const std::string& key);
    int require_int(const std::string& key) { return static_cast<int>(require_long(key)); }
    double get_double(const std::string& key, double def);
    std::uint64_t get_u64(const std::string& key, std::uint64_t def);
    std::string get_string(const std::string& key, const std::string& def);
    std::vector<long> get_long_list(const std::string& key, std::vector<long> def);

    void finish() const;  // call after all getters have registered their keys

private:
    const std::string* seen(const std::string& key);

    const ConfigMap& map_;
    std::string command_;
    std::vector<std::string> known_;
};

}  // namespace ivm
