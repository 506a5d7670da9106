#pragma once

#include <stdexcept>
#include <string>

namespace epsbound {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Gamma function evaluated at a non-positive integer.
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

/// Result too large to represent; distinct from a domain violation.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

/// Result underflows to zero; distinct from a domain violation.
class UnderflowError : public Error {
public:
    explicit UnderflowError(const std::string& msg) : Error(msg) {}
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& msg) : Error(msg) {}
};

/// Root bracketing failed (no sign change found).
class BracketError : public Error {
public:
    explicit BracketError(const std::string& msg) : Error(msg) {}
};

/// Requested bound state does not exist (coupling at or below critical).
class NoBoundState : public Error {
public:
    explicit NoBoundState(const std::string& msg) : Error(msg) {}
};

/// Radial grid cannot support the requested operation.
class GridError : public Error {
public:
    explicit GridError(const std::string& msg) : Error(msg) {}
};

/// Invalid run configuration (CLI / config file).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace epsbound
