#include "roadgames/config.hpp"

#include <sstream>

namespace roadgames {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

ConfigReader::ConfigReader(std::string_view text) {
    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const std::string trimmed = trim(line);
        if (trimmed.empty()) continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(line_no) +
                             ": expected 'key = value', found '" + trimmed + "'");
        const std::string key = trim(std::string_view(trimmed).substr(0, eq));
        const std::string value = trim(std::string_view(trimmed).substr(eq + 1));
        if (key.empty())
            throw ParseError("config line " + std::to_string(line_no) + ": empty key");
        if (!values_.emplace(key, value).second)
            throw ParseError("config: duplicate key '" + key + "'");
    }
}

bool ConfigReader::has(const std::string& key) const { return values_.count(key) != 0; }

std::string ConfigReader::take(const std::string& key, const std::string& fallback) {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::string value = it->second;
    values_.erase(it);
    return value;
}

double ConfigReader::take_double(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const std::string text = take(key, "");
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError(key + ": bad number '" + text + "'");
    }
}

long long ConfigReader::take_int(const std::string& key, long long fallback) {
    if (!has(key)) return fallback;
    const std::string text = take(key, "");
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError(key + ": bad integer '" + text + "'");
    }
}

std::vector<std::string> ConfigReader::take_list(const std::string& key) {
    std::vector<std::string> out;
    if (!has(key)) return out;
    std::string text = take(key, "");
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const std::string value = trim(item);
        if (!value.empty()) out.push_back(value);
    }
    if (out.empty()) throw ParseError(key + ": empty list");
    return out;
}

void ConfigReader::finish() const {
    if (values_.empty()) return;
    std::string names;
    for (const auto& [key, value] : values_) {
        if (!names.empty()) names += ", ";
        names += "'" + key + "'";
    }
    throw ParseError("unknown config field " + names);
}

}  // namespace roadgames
