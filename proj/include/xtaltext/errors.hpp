#ifndef XTALTEXT_ERRORS_HPP
#define XTALTEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xtal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidLatticeError : Error {
    using Error::Error;
};

struct InvalidStructureError : Error {
    using Error::Error;
};

struct MissingElementDataError : Error {
    using Error::Error;
};

struct UnknownGroupError : Error {
    using Error::Error;
};

struct NotSymmetricError : Error {
    explicit NotSymmetricError(const std::string& msg, std::size_t site_index = 0)
        : Error(msg), site_index(site_index) {}
    std::size_t site_index;
};

/// Parse failure carrying a 1-based line (and column, when known).
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column = 0)
        : Error(msg + " (line " + std::to_string(line) +
                (column ? ", column " + std::to_string(column) : "") + ")"),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

struct ConfigError : Error {
    using Error::Error;
};

struct EmptyDatasetError : Error {
    using Error::Error;
};

struct MissingPropertyError : Error {
    using Error::Error;
};

struct TransportError : Error {
    using Error::Error;
};

struct EndpointError : Error {
    EndpointError(int status, const std::string& msg)
        : Error("endpoint returned " + std::to_string(status) + ": " + msg),
          status(status) {}
    int status;
};

}  // namespace xtal

#endif
