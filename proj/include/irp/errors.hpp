#pragma once

#include <stdexcept>
#include <string>

namespace irp {

/// Thermodynamic function evaluated outside its domain (ρ ≤ 0, p ≤ 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A cell average left the admissible interior. Indicates a CFL or scheme
/// violation rather than a limiter defect.
class RegionViolation : public std::runtime_error {
public:
    RegionViolation(const std::string& what, int cell, long step = -1)
        : std::runtime_error(what), cell_(cell), step_(step) {}

    int cell() const noexcept { return cell_; }
    long step() const noexcept { return step_; }

private:
    int cell_;
    long step_;
};

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace irp
