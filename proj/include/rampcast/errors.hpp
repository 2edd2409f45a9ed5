#pragma once

#include <stdexcept>
#include <string>

namespace rampcast {

// Base for all domain errors raised by the library. kind() is a stable
// identifier used by the CLI for single-line diagnostics.
class RampError : public std::runtime_error {
public:
    RampError(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class SpacingError : public RampError {
public:
    explicit SpacingError(const std::string& msg) : RampError("SpacingError", msg) {}
};

class ValueError : public RampError {
public:
    explicit ValueError(const std::string& msg) : RampError("ValueError", msg) {}
};

class SizeError : public RampError {
public:
    explicit SizeError(const std::string& msg) : RampError("SizeError", msg) {}
};

class DomainError : public RampError {
public:
    explicit DomainError(const std::string& msg) : RampError("DomainError", msg) {}
};

class ShapeError : public RampError {
public:
    explicit ShapeError(const std::string& msg) : RampError("ShapeError", msg) {}
};

class SingularError : public RampError {
public:
    explicit SingularError(const std::string& msg) : RampError("SingularError", msg) {}
};

class SearchError : public RampError {
public:
    explicit SearchError(const std::string& msg) : RampError("SearchError", msg) {}
};

class IndexError : public RampError {
public:
    explicit IndexError(const std::string& msg) : RampError("IndexError", msg) {}
};

class ConfigError : public RampError {
public:
    explicit ConfigError(const std::string& msg) : RampError("ConfigError", msg) {}
};

class ConvergenceError : public RampError {
public:
    ConvergenceError(const std::string& msg, long iterations, double residual)
        : RampError("ConvergenceError",
                    msg + " (iterations=" + std::to_string(iterations) +
                        ", residual=" + std::to_string(residual) + ")"),
          iterations_(iterations),
          residual_(residual) {}
    long iterations() const { return iterations_; }
    double residual() const { return residual_; }

private:
    long iterations_;
    double residual_;
};

}  // namespace rampcast
