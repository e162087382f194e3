#pragma once

#include <stdexcept>
#include <string>

namespace exoshape {

// Base class for all toolkit errors so callers can catch them in one place.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// add/sub of transfer functions whose delays differ
class DelayMismatch : public Error {
public:
    explicit DelayMismatch(const std::string& msg) : Error(msg) {}
};

// inversion of a transfer function carrying a nonzero delay
class NonInvertibleDelay : public Error {
public:
    explicit NonInvertibleDelay(const std::string& msg) : Error(msg) {}
};

// inversion of / division by an identically-zero transfer function
class ZeroNumerator : public Error {
public:
    explicit ZeroNumerator(const std::string& msg) : Error(msg) {}
};

// frequency evaluation landed on a pole of the rational part
class PoleOnAxis : public Error {
public:
    explicit PoleOnAxis(const std::string& msg) : Error(msg) {}
};

// root finder exhausted its iteration budget
class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

// discretization of a transfer function with deg(num) > deg(den)
class ImproperTransferFunction : public Error {
public:
    explicit ImproperTransferFunction(const std::string& msg) : Error(msg) {}
};

// causal compensator construction requires the structural pole at s = 0
class DegenerateShape : public Error {
public:
    explicit DegenerateShape(const std::string& msg) : Error(msg) {}
};

// simulation signals exceeded the divergence guard
class InstabilityDetected : public Error {
public:
    explicit InstabilityDetected(const std::string& msg) : Error(msg) {}
};

// simulation state stopped being finite
class NonFiniteState : public Error {
public:
    explicit NonFiniteState(const std::string& msg) : Error(msg) {}
};

// config file could not be parsed at all
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// config parsed but violates a documented invariant
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// sweep over a parameter path that does not exist
class UnknownParam : public Error {
public:
    explicit UnknownParam(const std::string& msg) : Error(msg) {}
};

// sweep metric name not recognised
class UnknownMetric : public Error {
public:
    explicit UnknownMetric(const std::string& msg) : Error(msg) {}
};

}  // namespace exoshape
