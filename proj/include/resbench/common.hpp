#pragma once

#include <stdexcept>
#include <string>

namespace resbench {

// Thrown when a reservoir state or readout output leaves the finite range.
// Carries the time index of the failing step so callers can record it as a
// blowup rather than a hard failure.
class numeric_overflow_error : public std::runtime_error {
public:
    numeric_overflow_error(const std::string& what, long step)
        : std::runtime_error(what), step_(step) {}
    long step() const noexcept { return step_; }

private:
    long step_;
};

class singular_system_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class degenerate_matrix_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace resbench
