#pragma once

#include <stdexcept>
#include <string>

namespace nscc {

// Process exit codes used by the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitCalibrationError = 3,
    kExitEngineError = 4,
};

// Bad or missing inputs: files, CSV schemas, config fields.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Benchmark rescaling failures (e.g. zero provisional impact against a
// nonzero benchmark).
class CalibrationError : public std::runtime_error {
  public:
    explicit CalibrationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Run-fatal simulation failures (economy annihilation, invalid draws).
class EngineError : public std::runtime_error {
  public:
    explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace nscc
