#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gvc {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Table shape or identity problems that make the data unusable
// (dimension mismatch, duplicate nodes, malformed codes).
class StructuralError : public Error {
  public:
    using Error::Error;
};

// Unknown country / node / attribution-mode lookups.
class LookupError : public Error {
  public:
    using Error::Error;
};

// Invalid configuration (cutoffs, thresholds, synthesis parameters).
class ConfigError : public Error {
  public:
    using Error::Error;
};

// Hawkins-Simon viability failure: some column of A has sum >= 1.
class ViabilityError : public Error {
  public:
    ViabilityError(const std::string& what, std::vector<std::string> nodes)
        : Error(what), offending_nodes(std::move(nodes)) {}

    std::vector<std::string> offending_nodes;
};

// Linear solve produced a residual above tolerance.
class ConditioningError : public Error {
  public:
    ConditioningError(const std::string& what, double residual)
        : Error(what), residual(residual) {}

    double residual;
};

// Power-series evaluation requested on a non-contractive system.
class DivergenceError : public Error {
  public:
    using Error::Error;
};

// Bad caller input that is not a structural table defect
// (duplicate panel rows, malformed year ranges).
class InputError : public Error {
  public:
    using Error::Error;
};

// Filesystem-level failure, with path context in the message.
class IoError : public Error {
  public:
    using Error::Error;
};

// Schema violation in a dataset file. Line and column are 1-based;
// column 0 means the whole line.
class ParseError : public Error {
  public:
    ParseError(const std::string& file, std::size_t line, std::size_t column,
               const std::string& what)
        : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          file(file), line(line), column(column) {}

    std::string file;
    std::size_t line;
    std::size_t column;
};

} // namespace gvc
