#ifndef RISSEC_ERRORS_HPP
#define RISSEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rissec {

/// A closed-form path was requested outside its parameter regime
/// (e.g. non-integer Meijer-G orders); the quadrature path remains available.
class mode_error : public std::runtime_error {
public:
    explicit mode_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical evaluation failed to converge or produced a non-finite result.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Combinatorial enumeration would exceed the configured capacity.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rissec

#endif
