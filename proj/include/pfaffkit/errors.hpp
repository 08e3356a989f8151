#pragma once

#include <stdexcept>
#include <string>

namespace pfaffkit {

// Operands belong to different quadratic rings (their alpha values differ).
class ring_mismatch_error : public std::invalid_argument {
public:
    explicit ring_mismatch_error(const std::string& what_arg)
        : std::invalid_argument(what_arg) {}
};

// A brute-force oracle was asked to exceed its enforced size cap.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

// An identity the generators guarantee did not hold; indicates a bug in the
// construction rather than bad user input.
class structural_error : public std::logic_error {
public:
    explicit structural_error(const std::string& what_arg)
        : std::logic_error(what_arg) {}
};

// The backward extension w[-2] = -1/alpha^2 does not exist for alpha = 0.
class singular_extension_error : public std::domain_error {
public:
    explicit singular_extension_error(const std::string& what_arg)
        : std::domain_error(what_arg) {}
};

} // namespace pfaffkit
