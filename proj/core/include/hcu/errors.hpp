#pragma once

#include <stdexcept>
#include <string>

namespace hcu {

// Error taxonomy mirrors the CLI exit codes: config 2, solver 3, I/O 4.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A run that went physically wrong: inadmissible state, NaN, collapsed dt.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hcu
