#pragma once

#include <stdexcept>
#include <string>

namespace pstory {

// Malformed or invalid input (files, parameters). Carries an optional
// 1-based line number or a field path for diagnostics.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what, int line = 0, std::string field = {})
        : std::runtime_error(decorate(what, line, field)), line_(line), field_(std::move(field)) {}

    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    static std::string decorate(const std::string& what, int line, const std::string& field) {
        std::string out;
        if (line > 0) out += "line " + std::to_string(line) + ": ";
        if (!field.empty()) out += field + ": ";
        return out + what;
    }

    int line_;
    std::string field_;
};

// A story violates the planar-story conditions.
class story_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pstory
