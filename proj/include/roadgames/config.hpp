#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "roadgames/errors.hpp"

namespace roadgames {

// Shared "key = value" config reader. '#' starts a comment, blank lines are
// skipped. Every parser built on it rejects unknown keys by name, so typos
// fail loudly instead of silently keeping a default.
class ConfigReader {
public:
    explicit ConfigReader(std::string_view text);

    bool has(const std::string& key) const;
    // consume a key; empty optional-style access via has() first
    std::string take(const std::string& key, const std::string& fallback);

    double take_double(const std::string& key, double fallback);
    long long take_int(const std::string& key, long long fallback);
    std::vector<std::string> take_list(const std::string& key);  // comma-separated

    // after all known keys are consumed: throws ParseError naming leftovers
    void finish() const;

private:
    std::map<std::string, std::string> values_;
};

}  // namespace roadgames
