#pragma once

#include <stdexcept>
#include <string>

namespace hullopt {

/// Error categories, mapped onto CLI exit codes.
enum class ErrorKind { config = 1, numeric = 2, io = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ConfigError : Error {
    explicit ConfigError(std::string msg) : Error(ErrorKind::config, std::move(msg)) {}
};

struct NumericError : Error {
    explicit NumericError(std::string msg) : Error(ErrorKind::numeric, std::move(msg)) {}
};

struct IoError : Error {
    explicit IoError(std::string msg) : Error(ErrorKind::io, std::move(msg)) {}
};

}  // namespace hullopt
