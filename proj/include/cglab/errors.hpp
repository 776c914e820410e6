#pragma once
#include <stdexcept>
#include <string>

namespace cglab {

// Point outside the admissible chart domain (e.g. beyond a hyperbolic ball).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Numerically unusable input: singular metric, degenerate plane, ...
class DegeneracyError : public std::runtime_error {
public:
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cglab
