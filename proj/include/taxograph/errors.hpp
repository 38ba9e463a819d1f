#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taxograph {

enum class errc {
    empty_label,
    unknown_label,
    unknown_cluster,
    subset_name_collision,
    synonym_conflict,
    invalid_graph,
    parse_error,
    unknown_format_version,
    golden_mismatch,
    bad_argument,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Parse failures carry the 1-based line number of the offending input line
// (0 when the failure is not tied to a specific line).
class parse_error : public error {
public:
    parse_error(const std::string& message, std::size_t line = 0)
        : error(errc::parse_error, line == 0 ? message
                                             : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace taxograph
