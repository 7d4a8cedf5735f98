#include "config.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>

namespace ivm {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (errno != 0 || end == text.c_str() || *end != '\0')
        throw param_error("key '" + key + "': expected an integer, got '" + text + "'");
    return v;
}

}  // namespace

void ConfigMap::set(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

const std::string* ConfigMap::find(const std::string& key) const {
    const std::string* hit = nullptr;
    for (const auto& [k, v] : entries_)
        if (k == key) hit = &v;
    return hit;  // last assignment wins
}

ConfigMap parse_config_text(const std::string& text) {
    ConfigMap map;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw param_error("config line " + std::to_string(lineno) +
                              ": expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw param_error("config line " + std::to_string(lineno) + ": empty key");
        map.set(key, value);
    }
    return map;
}

ConfigReader::ConfigReader(const ConfigMap& map, std::string command)
    : map_(map), command_(std::move(command)) {}

const std::string* ConfigReader::seen(const std::string& key) {
    if (std::find(known_.begin(), known_.end(), key) == known_.end()) known_.push_back(key);
    return map_.find(key);
}

long ConfigReader::get_long(const std::string& key, long def) {
    const std::string* v = seen(key);
    return v ? parse_long(key, *v) : def;
}

long ConfigReader::require_long(const std::string& key) {
    const std::string* v = seen(key);
    if (!v)
        throw param_error("missing required key '" + key + "' for command " + command_);
    return parse_long(key, *v);
}

double ConfigReader::get_double(const std::string& key, double def) {
    const std::string* v = seen(key);
    if (!v) return def;
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(v->c_str(), &end);
    if (errno != 0 || end == v->c_str() || *end != '\0')
        throw param_error("key '" + key + "': expected a number, got '" + *v + "'");
    return x;
}

std::uint64_t ConfigReader::get_u64(const std::string& key, std::uint64_t def) {
    const std::string* v = seen(key);
    if (!v) return def;
    errno = 0;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v->c_str(), &end, 10);
    if (errno != 0 || end == v->c_str() || *end != '\0' || v->find('-') != std::string::npos)
        throw param_error("key '" + key + "': expected an unsigned integer, got '" + *v +
                          "'");
    return x;
}

std::string ConfigReader::get_string(const std::string& key, const std::string& def) {
    const std::string* v = seen(key);
    return v ? *v : def;
}

std::vector<long> ConfigReader::get_long_list(const std::string& key,
                                              std::vector<long> def) {
    const std::string* v = seen(key);
    if (!v) return def;
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= v->size()) {
        std::size_t comma = v->find(',', pos);
        if (comma == std::string::npos) comma = v->size();
        const std::string item = trim(v->substr(pos, comma - pos));
        if (item.empty())
            throw param_error("key '" + key + "': empty entry in list '" + *v + "'");
        out.push_back(parse_long(key, item));
        pos = comma + 1;
    }
    if (out.empty()) throw param_error("key '" + key + "': empty list");
    return out;
}

void ConfigReader::finish() const {
    for (const auto& [key, value] : map_.entries()) {
        if (std::find(known_.begin(), known_.end(), key) == known_.end()) {
            std::string valid;
            for (const auto& k : known_) {
                if (!valid.empty()) valid += ", ";
                valid += k;
            }
            throw param_error("unknown key '" + key + "' for command " + command_ +
                              "; valid keys: " + valid);
        }
    }
}

}  // namespace ivm
