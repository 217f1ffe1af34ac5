#pragma once

#include <stdexcept>
#include <string>

namespace ringlat {

// Raised when an operation requires a (strongly) connected graph and the
// input has gcd(a_1,...,a_k,n) > 1.  Connectivity is guaranteed for all
// ensemble-sampled tuples, so hitting this signals a caller bug.
class disconnected_error : public std::invalid_argument {
public:
    explicit disconnected_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Raised when a bounded search (rejection sampling, enumeration budget,
// point-count guard) exceeds its certified limit.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace ringlat
