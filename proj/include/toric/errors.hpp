#ifndef TORIC_ERRORS_HPP
#define TORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toric {

// Error taxonomy mirrors the CLI exit codes: input errors (2), guard
// violations (3), I/O failures (4). Internal invariant breaches use
// std::logic_error and are never expected to fire.

class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

class dimension_mismatch : public input_error {
public:
    explicit dimension_mismatch(const std::string& msg) : input_error(msg) {}
};

// Raised by facet_representation when the polytope does not span its
// ambient space; callers are expected to project away unused axes first.
class not_full_dimensional : public input_error {
public:
    explicit not_full_dimensional(const std::string& msg) : input_error(msg) {}
};

class empty_region : public input_error {
public:
    explicit empty_region(const std::string& msg) : input_error(msg) {}
};

class unbounded_region : public input_error {
public:
    explicit unbounded_region(const std::string& msg) : input_error(msg) {}
};

}  // namespace toric

#endif
