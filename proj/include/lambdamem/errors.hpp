#pragma once

#include <stdexcept>
#include <string>

namespace lambdamem {

// Integration state became NaN/Inf; usually signals a step size that is
// too large for the field strengths involved.
struct NonFiniteState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested time window clips a pulse above the truncation threshold.
struct WindowTooNarrow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An intensity normalization integral is zero.
struct ZeroInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// No signal pulse above threshold appeared at the output face.
struct RetrievalFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    int line = 0;
    std::string field;
    ParseError(const std::string& msg, int line_no = 0, std::string field_name = {})
        : std::runtime_error(format(msg, line_no, field_name)),
          line(line_no),
          field(std::move(field_name)) {}

  private:
    static std::string format(const std::string& msg, int line_no, const std::string& f) {
        std::string s = "parse error";
        if (line_no > 0) s += " (line " + std::to_string(line_no) + ")";
        if (!f.empty()) s += " [" + f + "]";
        return s + ": " + msg;
    }
};

struct ValidationError : std::runtime_error {
    ValidationError(const std::string& msg) : std::runtime_error("validation error: " + msg) {}
};

struct IoError : std::runtime_error {
    IoError(const std::string& msg, const std::string& path)
        : std::runtime_error("io error [" + path + "]: " + msg) {}
};

} // namespace lambdamem
