#ifndef MCF_ERRORS_HPP_
#define MCF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mcf {

// Error categories map 1:1 onto CLI exit codes (config=2, io=3, numeric=4).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

struct ParseError : IoError {
    explicit ParseError(const std::string& msg) : IoError(msg) {}
};

struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

}  // namespace mcf

#endif  // MCF_ERRORS_HPP_
