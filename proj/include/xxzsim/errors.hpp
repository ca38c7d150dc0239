#pragma once

#include <stdexcept>
#include <string>

namespace xxzsim {

/// Iterative numerics failed to converge (eigensolver sweep cap, ...).
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration or command-line input could not be interpreted.
/// Carries the offending line (0 when not line-based) and key.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, std::string key, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", key '" + key + "': " + what
                                      : (key.empty() ? what : "key '" + key + "': " + what)),
          line_(line),
          key_(std::move(key)) {}

    int line() const { return line_; }
    const std::string& key() const { return key_; }

private:
    int line_;
    std::string key_;
};

/// File could not be opened or written; message names the path.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace xxzsim
