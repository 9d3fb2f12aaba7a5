#pragma once

#include <stdexcept>
#include <string>

namespace charrel {

// Bad user input or a domain precondition violation. CLI exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a root of a coefficient denominator.
struct pole_error : input_error {
    explicit pole_error(const std::string& what) : input_error(what) {}
};

// A configured cap (table size, enumeration count) was exceeded. CLI exit code 2.
struct resource_guard_error : std::runtime_error {
    explicit resource_guard_error(const std::string& what) : std::runtime_error(what) {}
};

// A deduction the source material guarantees failed on real data. CLI exit code 3.
struct falsification_alarm : std::runtime_error {
    explicit falsification_alarm(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; always a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// An extra interpolation sample failed to lie on the fitted polynomial,
// i.e. a degree bound was wrong.
struct interpolation_mismatch : internal_error {
    explicit interpolation_mismatch(const std::string& what) : internal_error(what) {}
};

}  // namespace charrel
