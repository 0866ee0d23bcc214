#include "wavescrub/kv.hpp"
#include "wavescrub/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wavescrub {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_double_or_throw(std::string_view token, std::string_view key) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ConfigError("key '" + std::string(key) + "': cannot parse number '" +
                          std::string(token) + "'");
    }
    return value;
}

} // namespace

KvConfig KvConfig::parse(std::string_view text) {
    KvConfig config;
    config.source_ = std::string(text);
    std::istringstream lines{config.source_};
    std::string line;
    size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::string_view lv = trim(line);
        if (lv.empty() || lv.front() == '#') continue;
        const auto eq = lv.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected key = value, got '" + std::string(lv) +
                              "'");
        }
        Entry entry;
        entry.key = std::string(trim(lv.substr(0, eq)));
        entry.value = std::string(trim(lv.substr(eq + 1)));
        entry.line = line_no;
        if (entry.key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        }
        config.entries_.push_back(std::move(entry));
    }
    return config;
}

KvConfig KvConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::optional<std::string> KvConfig::get(std::string_view key) const {
    std::optional<std::string> result;
    for (const Entry& e : entries_) {
        if (e.key == key) {
            e.used = true;
            result = e.value;
        }
    }
    return result;
}

std::vector<std::string> KvConfig::get_all(std::string_view key) const {
    std::vector<std::string> result;
    for (const Entry& e : entries_) {
        if (e.key == key) {
            e.used = true;
            result.push_back(e.value);
        }
    }
    return result;
}

bool KvConfig::has(std::string_view key) const {
    for (const Entry& e : entries_) {
        if (e.key == key) return true;
    }
    return false;
}

std::optional<double> KvConfig::get_double(std::string_view key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return parse_double_or_throw(*v, key);
}

std::optional<std::uint64_t> KvConfig::get_u64(std::string_view key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), value);
    if (ec != std::errc{} || ptr != v->data() + v->size()) {
        throw ConfigError("key '" + std::string(key) +
                          "': cannot parse unsigned integer '" + *v + "'");
    }
    return value;
}

std::optional<std::vector<double>> KvConfig::get_double_list(
    std::string_view key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    std::vector<double> values;
    std::string_view rest = *v;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view cell = trim(rest.substr(0, comma));
        if (cell.empty()) {
            throw ConfigError("key '" + std::string(key) + "': empty list entry");
        }
        values.push_back(parse_double_or_throw(cell, key));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return values;
}

double KvConfig::require_double(std::string_view key) const {
    auto v = get_double(key);
    if (!v) {
        throw ConfigError("missing required key '" + std::string(key) + "'");
    }
    return *v;
}

void KvConfig::check_all_used() const {
    std::string unknown;
    for (const Entry& e : entries_) {
        if (!e.used) {
            if (!unknown.empty()) unknown += ", ";
            unknown += "'" + e.key + "' (line " + std::to_string(e.line) + ")";
        }
    }
    if (!unknown.empty()) {
        throw ConfigError("unknown config keys: " + unknown);
    }
}

} // namespace wavescrub
